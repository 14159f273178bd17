#include "pb/binomial.hpp"

#include <algorithm>
#include <thread>

namespace pb {

BinomialSpec::BinomialSpec(const FieldCtx& ctx, u32 q_, u32 r_, FieldElem a_)
    : F(&ctx), q(q_), r(r_), a(a_) {
    PrimePower qq = PrimePower::from_q(q_);
    if (ctx.p() != qq.p || ctx.size() != static_cast<u64>(q_) * q_)
        throw std::invalid_argument("BinomialSpec: context is not GF(q^2)");
    if (r_ < 3 || !is_prime(r_) ) throw std::invalid_argument("BinomialSpec: r must be an odd prime");
    if (a_.v == 0) throw std::invalid_argument("BinomialSpec: a must be nonzero");
    e = static_cast<u64>(r_) * (q_ - 1) + 1;
}

FieldElem eval_f(const BinomialSpec& spec, FieldElem x) {
    const FieldCtx& F = spec.field();
    if (x.v == 0) return F.zero();
    return F.add(F.mul(spec.a, x), F.pow(x, static_cast<i64>(spec.e)));
}

bool is_permutation(const BinomialSpec& spec) {
    const FieldCtx& F = spec.field();
    std::vector<std::uint8_t> seen(F.size(), 0);
    for (u64 i = 0; i < F.size(); ++i) {
        FieldElem y = eval_f(spec, F.from_index(i));
        if (seen[y.v]) return false;
        seen[y.v] = 1;
    }
    return true;
}

bool zero_only_root(const BinomialSpec& spec) {
    const FieldCtx& F = spec.field();
    if ((spec.q + 1) % spec.r == 0) {
        i64 k = (spec.q + 1) / spec.r;
        return !(F.pow(spec.a, k) == F.one());
    }
    for (u64 i = 1; i < F.size(); ++i)
        if (eval_f(spec, F.from_index(i)).v == 0) return false;
    return true;
}

BClass b_class(const BinomialSpec& spec) {
    if ((spec.q + 1) % spec.r != 0)
        throw std::invalid_argument("b_class: r does not divide q+1");
    const FieldCtx& F = spec.field();
    return {F.pow(spec.a, static_cast<i64>((spec.q + 1) / spec.r)), spec.a};
}

std::vector<ClassRow> classify_classes(const FieldCtx& F, u32 q, u32 r, unsigned jobs) {
    if ((q + 1) % r != 0)
        throw std::invalid_argument("classify_classes: r does not divide q+1");
    const u64 nclasses = static_cast<u64>(r) * (q - 1);
    std::vector<ClassRow> rows(nclasses);
    const FieldElem g = F.generator();
    const i64 power = (q + 1) / r;

    auto work = [&](u64 lo, u64 hi) {
        FieldElem a = F.pow(g, static_cast<i64>(lo));
        for (u64 t = lo; t < hi; ++t) {
            BinomialSpec spec(F, q, r, a);
            rows[t] = {F.pow(a, power), a, static_cast<u32>(t), is_permutation(spec)};
            a = F.mul(a, g);
        }
    };

    if (jobs <= 1) {
        work(0, nclasses);
    } else {
        unsigned n = std::min<u64>(jobs, nclasses);
        std::vector<std::thread> pool;
        u64 chunk = (nclasses + n - 1) / n;
        for (unsigned w = 0; w < n; ++w) {
            u64 lo = w * chunk, hi = std::min<u64>(nclasses, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    std::sort(rows.begin(), rows.end(),
              [](const ClassRow& x, const ClassRow& y) { return x.b.v < y.b.v; });
    // the first r(q-1) powers of g hit each b exactly once
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].b == rows[i - 1].b)
            throw std::logic_error("classify_classes: duplicate b value");
    return rows;
}

}  // namespace pb
