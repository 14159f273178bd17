#include "pb/hermite.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "pb/symbolic.hpp"

namespace pb {

GammaSet gamma(u32 q, u32 alpha, u32 r) {
    if (alpha > q - 1) throw std::invalid_argument("gamma: alpha out of range");
    const i64 lo = static_cast<i64>(r - 1) * (alpha + 1) - static_cast<i64>(r) * q;
    const i64 hi = static_cast<i64>(r - 1) * alpha - 1;
    const i64 step = q + 1;
    GammaSet out{q, alpha, r, {}};
    i64 k = lo >= 0 ? (lo + step - 1) / step : -((-lo) / step);  // ceil(lo/step)
    for (; k * step <= hi; ++k) out.members.push_back(k * step);
    return out;
}

u32 lucas_binomial(u64 n, i64 m, u32 p) {
    if (m < 0 || static_cast<u64>(m) > n) return 0;
    u64 mm = static_cast<u64>(m);
    u64 r = 1;
    while (n || mm) {
        u64 nd = n % p, md = mm % p;
        if (md > nd) return 0;
        // C(nd, md) mod p with nd < p, via the multiplicative formula
        u64 c = 1;
        for (u64 t = 1; t <= md; ++t) {
            c = c * ((nd - md + t) % p) % p;
            // divide by t: multiply by t^{p-2}
            u64 inv = 1, b = t % p, e = p - 2;
            while (e) {
                if (e & 1) inv = inv * b % p;
                b = b * b % p;
                e >>= 1;
            }
            c = c * inv % p;
        }
        r = r * c % p;
        n /= p;
        mm /= p;
    }
    return static_cast<u32>(r);
}

LambdaValue lambda_direct(const FieldCtx& F, u32 q, u32 alpha, FieldElem a, u32 r) {
    if (alpha > q - 1) throw std::invalid_argument("lambda_direct: alpha out of range");
    if (a.v == 0) throw std::invalid_argument("lambda_direct: a must be nonzero");
    const u32 p = F.p();
    const i64 beta = static_cast<i64>(q) - 1 - alpha;
    const FieldElem ia = F.inv(a);
    LambdaValue out{F.zero(), 0};
    for (i64 n : gamma(q, alpha, r).members) {
        i64 num = static_cast<i64>(alpha) + 1 + n;
        if (num % r != 0) continue;  // i - j must be integral
        i64 diff = num / static_cast<i64>(r);
        i64 ilo = std::max<i64>(0, diff);
        i64 ihi = std::min<i64>(alpha, beta + diff);
        for (i64 i = ilo; i <= ihi; ++i) {
            i64 j = i - diff;
            ++out.term_count;
            u64 c = static_cast<u64>(lucas_binomial(alpha, i, p)) * lucas_binomial(static_cast<u64>(beta), j, p) % p;
            if (c == 0) continue;
            FieldElem t = F.mul(F.element(static_cast<long>(c)), F.pow(ia, i + j * static_cast<i64>(q)));
            out.value = F.add(out.value, t);
        }
    }
    return out;
}

FieldElem power_sum(const BinomialSpec& spec, u64 s) {
    if (s == 0) throw std::invalid_argument("power_sum: s must be >= 1");
    const FieldCtx& F = spec.field();
    FieldElem acc = F.zero();
    for (u64 i = 1; i < F.size(); ++i) {
        FieldElem y = eval_f(spec, F.from_index(i));
        if (y.v) acc = F.add(acc, F.pow(y, static_cast<i64>(s)));
    }
    return acc;
}

namespace {

const GPoly& cached_g(u32 alpha) {
    static std::map<u32, GPoly> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lk(m);
    auto it = cache.find(alpha);
    if (it == cache.end()) it = cache.emplace(alpha, extract_g(alpha)).first;
    return it->second;
}

}  // namespace

FieldElem lambda_closed(const FieldCtx& F, u32 q, u32 alpha, FieldElem a) {
    if ((q + 1) % 5 != 0) throw std::invalid_argument("lambda_closed: 5 must divide q+1");
    if (alpha == 0 || (alpha + 1) % 5 != 0)
        throw std::invalid_argument("lambda_closed: alpha+1 must be a positive multiple of 5");
    if (q < 4 * alpha + 8) throw std::invalid_argument("lambda_closed: requires q >= 4*alpha + 8");
    if (a.v == 0) throw std::invalid_argument("lambda_closed: a must be nonzero");

    const GPoly& gp = cached_g(alpha);
    const u32 p = F.p();  // p != 5 since 5 | q+1

    // w = a^{-q(q+1)/5}; the naive v = a^{-(q+1)/5} is off by a 5th root
    // of unity unless a is a 5th power.
    const FieldElem w = F.pow(a, -(static_cast<i64>(q) * (q + 1) / 5));
    FieldElem phi = F.zero();
    for (int t = 0; t < 5; ++t) phi = F.add(phi, F.pow(w, t));

    const FpPoly gmod = zpoly_mod_p(gp.g, p);
    const FieldElem gw = F.eval_fp_poly(gmod, w);
    const FieldElem pref = F.pow(F.neg(a), static_cast<i64>((alpha + 1) / 5) * q);
    const FieldElem inv5e = F.pow(F.inv(F.element(5)), static_cast<i64>(gp.e));

    FieldElem val = F.mul(F.mul(F.mul(pref, F.mul(w, phi)), inv5e), gw);
    const bool flip = ((alpha + 1) / 5) % 2 == 0;  // undo extract_g's sign
    return flip ? F.neg(val) : val;
}

std::vector<u32> special_alphas(u32 q) {
    std::vector<u32> out;
    if (q % 2 == 0) return out;
    if ((q - 3) % 4 == 0) out.push_back((q - 3) / 4);
    out.push_back((q - 1) / 2);
    if ((3 * q - 1) % 4 == 0) out.push_back((3 * q - 1) / 4);
    return out;
}

FieldElem lambda_special(const FieldCtx& F, u32 q, u32 alpha, FieldElem a) {
    if ((q + 1) % 5 != 0) throw std::invalid_argument("lambda_special: 5 must divide q+1");
    if (a.v == 0) throw std::invalid_argument("lambda_special: a must be nonzero");
    const FieldElem y = F.pow(a, static_cast<i64>((q + 1) / 5));
    if (y == F.one() || !(F.pow(y, 5) == F.one()))
        throw std::invalid_argument("lambda_special: a^{(q+1)/5} must be a nontrivial 5th root of unity");

    FieldElem s;
    if (q % 2 == 1 && alpha == (q - 1) / 2) {
        s = F.add(F.add(F.inv(y), F.one()), F.add(y, F.mul(y, y)));
    } else if (q % 4 == 3 && alpha == (q - 3) / 4) {
        s = F.add(F.add(F.one(), y), F.add(F.mul(y, y), F.pow(y, 3)));
    } else if (q % 4 == 3 && alpha == (3 * q - 1) / 4) {
        s = F.add(F.add(F.pow(y, -2), F.inv(y)), F.add(F.one(), y));
    } else {
        throw std::invalid_argument("lambda_special: alpha is not a special value for this q");
    }
    // (alpha+1)/5 is integral at every special alpha when 5 | q+1
    return F.neg(F.mul(F.pow(a, -static_cast<i64>((alpha + 1) / 5)), s));
}

bool hermite_check(const BinomialSpec& spec) {
    if (!zero_only_root(spec)) return false;
    for (u32 alpha = 0; alpha <= spec.q - 1; ++alpha)
        if (lambda_direct(spec.field(), spec.q, alpha, spec.a, spec.r).value.v != 0)
            return false;
    return true;
}

}  // namespace pb
