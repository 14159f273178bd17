#include "pb/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "pb/hermite.hpp"
#include "pb/symbolic.hpp"

namespace pb {

CheckResult verify_fixture_regeneration() {
    static const u32 alphas[] = {4, 9, 14, 24};
    static const u32 expected_e[] = {4, 10, 16, 28};
    std::ostringstream os;
    for (int k = 0; k < 4; ++k) {
        GPoly gp = extract_g(alphas[k]);
        if (gp.e != expected_e[k]) {
            os << "alpha=" << alphas[k] << ": e=" << gp.e << ", expected " << expected_e[k];
            return {false, os.str()};
        }
        const ZPoly& fix = fixture_g(alphas[k]);
        if (!(gp.g == fix)) {
            std::size_t n = std::max(gp.g.c.size(), fix.c.size());
            for (std::size_t i = 0; i < n; ++i)
                if (gp.g.coeff(i) != fix.coeff(i)) {
                    os << "alpha=" << alphas[k] << ": coefficient of x^" << i << " regenerated "
                       << gp.g.coeff(i).get_str() << " vs table " << fix.coeff(i).get_str();
                    return {false, os.str()};
                }
        }
        os << "e_" << alphas[k] << "=" << gp.e << " ";
    }
    os << "(all four tables regenerated exactly)";
    return {true, os.str()};
}

CheckResult verify_resultant_gcd() {
    const ZPoly &g4 = fixture_g(4), &g9 = fixture_g(9), &g14 = fixture_g(14);
    Int r49 = resultant(g4, g9);
    Int r414 = resultant(g4, g14);
    Int g;
    mpz_gcd(g.get_mpz_t(), r49.get_mpz_t(), r414.get_mpz_t());
    Factorization f = factor_small(g, 1000);
    std::map<u64, u32> expected{{2, 15}, {3, 3}, {5, 197}};
    if (f.factors != expected || f.cofactor != 1) {
        std::ostringstream os;
        os << "gcd factorization {";
        for (auto& [p, e] : f.factors) os << p << "^" << e << " ";
        os << "} cofactor " << f.cofactor.get_str() << " != 2^15 3^3 5^197";
        return {false, os.str()};
    }
    return {true, "gcd(R(g4,g9), R(g4,g14)) = 2^15 * 3^3 * 5^197, cofactor 1"};
}

CheckResult verify_char_gcds() {
    const ZPoly &g4 = fixture_g(4), &g9 = fixture_g(9), &g24 = fixture_g(24);
    FpPoly m2 = fp_gcd(zpoly_mod_p(g4, 2), zpoly_mod_p(g24, 2));
    if (!(m2 == FpPoly::x(2)))
        return {false, "gcd(g4, g24) mod 2 = " + m2.to_string() + ", expected x"};
    FpPoly m3 = fp_gcd(zpoly_mod_p(g4, 3), zpoly_mod_p(g9, 3));
    if (!(m3 == FpPoly::one(3)))
        return {false, "gcd(g4, g9) mod 3 = " + m3.to_string() + ", expected 1"};
    return {true, "gcd mod 2 (g4,g24) = x; gcd mod 3 (g4,g9) = 1"};
}

CheckResult verify_closed_form_equivalence(unsigned samples_per_case, u64 seed) {
    static const u32 qs[] = {29, 49, 59, 64, 89};
    u64 cases = 0;
    for (u32 q : qs) {
        PrimePower pp = PrimePower::from_q(q);
        FieldCtx F(pp.p, 2 * pp.n);
        std::mt19937_64 rng(seed ^ (static_cast<u64>(q) << 32));
        for (u32 alpha = 4; 4 * alpha + 8 <= q; alpha += 5) {
            for (unsigned s = 0; s < samples_per_case; ++s) {
                FieldElem a = F.from_index(1 + rng() % (F.size() - 1));
                FieldElem closed = lambda_closed(F, q, alpha, a);
                FieldElem direct = lambda_direct(F, q, alpha, a, 5).value;
                if (!(closed == direct)) {
                    std::ostringstream os;
                    os << "q=" << q << " alpha=" << alpha << " a_index=" << a.v
                       << ": closed " << closed.v << " != direct " << direct.v;
                    return {false, os.str()};
                }
                ++cases;
            }
        }
    }
    return {true, std::to_string(cases) + " (q, alpha, a) cases agree"};
}

CheckResult verify_special_value_pattern() {
    static const u32 qs[] = {19, 29, 49};
    u64 zero_cases = 0, special_cases = 0;
    for (u32 q : qs) {
        PrimePower pp = PrimePower::from_q(q);
        FieldCtx F(pp.p, 2 * pp.n);
        std::vector<u32> specials = special_alphas(q);
        for (u64 i = 1; i < F.size(); ++i) {
            FieldElem a = F.from_index(i);
            FieldElem y = F.pow(a, static_cast<i64>((q + 1) / 5));
            if (y == F.one() || !(F.pow(y, 5) == F.one())) continue;
            for (u32 alpha = 1; alpha <= q - 1; ++alpha) {
                FieldElem lam = lambda_direct(F, q, alpha, a, 5).value;
                bool is_special = std::find(specials.begin(), specials.end(), alpha) != specials.end();
                if (is_special) {
                    FieldElem want = lambda_special(F, q, alpha, a);
                    ++special_cases;
                    if (!(lam == want)) {
                        std::ostringstream os;
                        os << "q=" << q << " alpha=" << alpha << " a_index=" << a.v
                           << ": lambda " << lam.v << " != closed form " << want.v;
                        return {false, os.str()};
                    }
                } else {
                    ++zero_cases;
                    if (lam.v != 0) {
                        std::ostringstream os;
                        os << "q=" << q << " alpha=" << alpha << " a_index=" << a.v
                           << ": lambda = " << lam.v << ", expected 0";
                        return {false, os.str()};
                    }
                }
            }
        }
    }
    std::ostringstream os;
    os << zero_cases << " vanishing cases, " << special_cases << " special-value cases "
       << "(special alphas per q: 19 -> 4,9,14; 29 -> 14; 49 -> 24)";
    return {true, os.str()};
}

}  // namespace pb
