#include "pb/search.hpp"

#include <algorithm>
#include <chrono>

#include "pb/hermite.hpp"

namespace pb {

std::vector<PrimePower> enumerate_prime_powers(u32 max_q, std::optional<u32> r_filter) {
    if (max_q < 2) throw std::invalid_argument("enumerate_prime_powers: max_q must be >= 2");
    std::vector<PrimePower> out;
    for (u32 p = 2; p <= max_q; ++p) {
        if (!is_prime(p)) continue;
        u64 q = p;
        for (u32 n = 1; q <= max_q; ++n, q *= p)
            out.emplace_back(p, n);
    }
    std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.q < b.q; });
    if (r_filter) {
        u32 r = *r_filter;
        std::erase_if(out, [r](const PrimePower& pp) { return (pp.q + 1) % r != 0; });
    }
    return out;
}

bool TheoremPredicate::applies_to(u32 qq) const {
    if (pow2_family) return (qq & (qq - 1)) == 0 && (qq + 1) % r == 0;
    return qq == q;
}

bool TheoremPredicate::eval(const FieldCtx& F, FieldElem b) const {
    switch (kind) {
        case CondKind::NontrivialRthRoot:
            return !(b == F.one()) && F.pow(b, static_cast<i64>(r)) == F.one();
        case CondKind::RootOfProduct:
            for (const FpPoly& f : factors)
                if (F.eval_fp_poly(f, b).v == 0) return true;
            return false;
        case CondKind::MemberOfSet:
            for (u32 m : members)
                if (b == F.element(static_cast<long>(m))) return true;
            return false;
    }
    return false;
}

namespace {

TheoremPredicate roots(u32 r, u32 q, int case_id, std::vector<FpPoly> fs) {
    TheoremPredicate t;
    t.r = r;
    t.q = q;
    t.case_id = case_id;
    t.kind = CondKind::RootOfProduct;
    t.factors = std::move(fs);
    return t;
}

std::vector<TheoremPredicate> build_cases_r5() {
    std::vector<TheoremPredicate> cs;
    TheoremPredicate c1;
    c1.r = 5;
    c1.pow2_family = true;  // q = 2^{4k+2}, equivalently 2-power q with 5 | q+1
    c1.case_id = 1;
    c1.kind = CondKind::NontrivialRthRoot;
    cs.push_back(c1);

    cs.push_back(roots(5, 9, 2,
                       {FpPoly(3, {1, 1}), FpPoly(3, {1, 0, 1}), FpPoly(3, {2, 1, 1}),
                        FpPoly(3, {2, 2, 1}), FpPoly(3, {1, 1, 1, 0, 1}), FpPoly(3, {1, 0, 1, 1, 1}),
                        FpPoly(3, {1, 2, 1, 2, 1})}));
    cs.push_back(roots(5, 19, 3,
                       {FpPoly(19, {1, 1}), FpPoly(19, {2, 1}), FpPoly(19, {3, 1}),
                        FpPoly(19, {4, 1}), FpPoly(19, {5, 1}), FpPoly(19, {9, 1}),
                        FpPoly(19, {10, 1}), FpPoly(19, {13, 1}), FpPoly(19, {17, 1}),
                        FpPoly(19, {16, 3, 1}), FpPoly(19, {1, 4, 1}), FpPoly(19, {6, 18, 1})}));
    TheoremPredicate c4;
    c4.r = 5;
    c4.q = 29;
    c4.case_id = 4;
    c4.kind = CondKind::MemberOfSet;
    c4.members = {15, 18, 22, 23};
    cs.push_back(c4);
    cs.push_back(roots(5, 49, 5, {FpPoly(7, {1, 4, 1})}));
    // The published q=59 factor list (4+x)(55+x)(x^2+36) constrains the
    // square root a^{(q+1)/10} of b; squaring its root set {-4, 4, +-6i}
    // gives the equivalent b-level condition b in {16, 23}, which is what
    // brute force confirms.
    TheoremPredicate c6;
    c6.r = 5;
    c6.q = 59;
    c6.case_id = 6;
    c6.kind = CondKind::MemberOfSet;
    c6.members = {16, 23};
    cs.push_back(c6);
    cs.push_back(roots(5, 64, 7, {FpPoly(2, {1, 1, 1}), FpPoly(2, {1, 1, 0, 1})}));
    return cs;
}

std::vector<TheoremPredicate> build_cases_r7() {
    std::vector<TheoremPredicate> cs;
    std::vector<FpPoly> q13;
    for (long c = 1; c <= 11; ++c) q13.push_back(FpPoly(13, {c, 1}));
    for (auto [c0, c1] : std::initializer_list<std::pair<long, long>>{
             {12, 1}, {9, 2}, {10, 3}, {9, 4}, {12, 4}, {10, 5}, {3, 6}, {1, 7},
             {4, 7}, {1, 8}, {12, 9}, {1, 10}, {3, 12}, {4, 12}, {12, 12}})
        q13.push_back(FpPoly(13, {c0, c1, 1}));
    cs.push_back(roots(7, 13, 1, std::move(q13)));

    cs.push_back(roots(7, 27, 2,
                       {FpPoly(3, {2, 1, 1, 1}), FpPoly(3, {1, 2, 1, 1}), FpPoly(3, {1, 1, 2, 1}),
                        FpPoly(3, {2, 2, 2, 1}), FpPoly(3, {1, 2, 1, 2, 1, 2, 1})}));
    cs.push_back(roots(7, 41, 3,
                       {FpPoly(41, {9, 1}), FpPoly(41, {10, 1}), FpPoly(41, {26, 1}),
                        FpPoly(41, {30, 1}), FpPoly(41, {32, 1}), FpPoly(41, {34, 1}),
                        FpPoly(41, {35, 1}), FpPoly(41, {37, 1}), FpPoly(41, {39, 2, 1}),
                        FpPoly(41, {1, 14, 1}), FpPoly(41, {20, 40, 1})}));
    return cs;
}

ClassificationReport classify_with(const std::vector<TheoremPredicate>& cases, u32 q, u32 r,
                                   const SearchOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    PrimePower pp = PrimePower::from_q(q);
    if (static_cast<u64>(q) * q > opts.size_cap)
        throw std::invalid_argument("classify: q^2 exceeds size cap");
    FieldCtx F(pp.p, 2 * pp.n, opts.size_cap);

    std::vector<ClassRow> rows = classify_classes(F, q, r, opts.jobs);

    std::vector<const TheoremPredicate*> applicable;
    for (const auto& c : cases)
        if (c.applies_to(q)) applicable.push_back(&c);

    ClassificationReport rep;
    rep.q = q;
    rep.r = r;
    rep.rows.reserve(rows.size());
    for (const ClassRow& row : rows) {
        ClassRecord rec;
        rec.q = q;
        rec.p = pp.p;
        rec.n = pp.n;
        rec.r = r;
        rec.b_index = row.b.v;
        rec.a_rep_index = row.a_rep.v;
        rec.a_rep_power = row.a_rep_power;
        rec.is_pp = row.is_pp;
        bool predicted = false;
        for (const auto* c : applicable)
            if (c->eval(F, row.b)) {
                predicted = true;
                if (rec.matched_case == 0) rec.matched_case = c->case_id;
            }
        if (row.is_pp) ++rep.pp_count;
        if (predicted != row.is_pp) rep.diff_b.push_back(row.b.v);
        rep.rows.push_back(rec);
    }

    if (opts.cross_check_fraction > 0) {
        u64 stride = static_cast<u64>(1.0 / std::min(1.0, opts.cross_check_fraction));
        if (stride == 0) stride = 1;
        for (std::size_t i = 0; i < rows.size(); i += stride) {
            BinomialSpec spec(F, q, r, rows[i].a_rep);
            ++rep.hermite_checked;
            if (hermite_check(spec) != rows[i].is_pp) ++rep.hermite_mismatches;
        }
    }

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// Negative sweep for r nmid q+1: no a may yield a permutation.
bool no_pp_check(u32 q, u32 r, const SearchOptions& opts, bool& exhaustive) {
    PrimePower pp = PrimePower::from_q(q);
    FieldCtx F(pp.p, 2 * pp.n, opts.size_cap);
    const u64 units = F.size() - 1;
    exhaustive = q <= 30;
    if (exhaustive) {
        for (u64 i = 1; i < F.size(); ++i) {
            BinomialSpec spec(F, q, r, F.from_index(i));
            if (is_permutation(spec)) return false;
        }
        return true;
    }
    const u64 samples = std::min<u64>(opts.negative_samples, units);
    u64 prev = units;  // sentinel, never produced
    for (u64 k = 0; k < samples; ++k) {
        u64 t = k * units / samples;
        if (t == prev) continue;
        prev = t;
        BinomialSpec spec(F, q, r, F.pow(F.generator(), static_cast<i64>(t)));
        if (is_permutation(spec)) return false;
    }
    return true;
}

}  // namespace

const std::vector<TheoremPredicate>& known_cases(u32 r) {
    static const std::vector<TheoremPredicate> r5 = build_cases_r5();
    static const std::vector<TheoremPredicate> r7 = build_cases_r7();
    if (r == 5) return r5;
    if (r == 7) return r7;
    throw std::invalid_argument("known_cases: only r = 5 and r = 7 have case tables");
}

ClassificationReport classify(u32 q, u32 r, const SearchOptions& opts) {
    std::vector<TheoremPredicate> empty;
    const std::vector<TheoremPredicate>* cases = &empty;
    if (r == 5 || r == 7) cases = &known_cases(r);
    return classify_with(*cases, q, r, opts);
}

TheoremVerification verify_theorem_with(const std::vector<TheoremPredicate>& cases, u32 r,
                                        u32 q_max, const SearchOptions& opts) {
    if (!is_prime(r) || r < 3) throw std::invalid_argument("verify_theorem: r must be an odd prime");
    TheoremVerification out;
    out.r = r;
    out.q_max = q_max;
    out.pass = true;
    for (const PrimePower& pp : enumerate_prime_powers(q_max)) {
        if (pp.q < r) continue;  // exponent degenerates mod x^{q^2} - x below r
        PerQResult res;
        res.q = pp.q;
        res.divides = (pp.q + 1) % r == 0;
        if (res.divides) {
            ClassificationReport rep = classify_with(cases, pp.q, r, opts);
            res.exhaustive = true;
            res.pp_classes = rep.pp_count;
            res.diff_b = rep.diff_b;
            res.pass = rep.diff_b.empty();
        } else {
            res.pass = no_pp_check(pp.q, r, opts, res.exhaustive);
        }
        out.pass = out.pass && res.pass;
        out.per_q.push_back(std::move(res));
    }
    return out;
}

TheoremVerification verify_theorem(u32 r, u32 q_max, const SearchOptions& opts) {
    return verify_theorem_with(known_cases(r), r, q_max, opts);
}

std::vector<ConjectureFinding> conjecture_scan(u32 r, u32 q_max, const SearchOptions& opts) {
    if (!is_prime(r) || r < 3) throw std::invalid_argument("conjecture_scan: r must be an odd prime");
    std::vector<ConjectureFinding> out;
    for (const PrimePower& pp : enumerate_prime_powers(q_max, r)) {
        if (pp.q < r) continue;
        PrimePower base = PrimePower::from_q(pp.q);
        FieldCtx F(base.p, 2 * base.n, opts.size_cap);
        for (const ClassRow& row : classify_classes(F, pp.q, r, opts.jobs)) {
            if (!row.is_pp) continue;
            ConjectureFinding f;
            f.q = pp.q;
            f.b_index = row.b.v;
            f.a_rep_power = row.a_rep_power;
            f.b_is_rth_root = F.pow(row.b, static_cast<i64>(r)) == F.one();
            out.push_back(f);
        }
    }
    return out;  // already sorted: q ascending, b_index ascending per q
}

u32 default_q_max(u32 r) {
    if (r == 5) return 128;
    if (r == 7) return 100;
    return 128;
}

}  // namespace pb
