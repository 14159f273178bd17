#ifndef PB_VERIFY_HPP
#define PB_VERIFY_HPP

#include <string>

#include "pb/gf.hpp"

namespace pb {

struct CheckResult {
    bool pass = false;
    std::string detail;  // summary on pass, first mismatch on failure
};

/// extract_g(alpha) == the fixture table, with the expected 5-power
/// exponents e = (4, 10, 16, 28), for alpha in {4, 9, 14, 24}.
CheckResult verify_fixture_regeneration();

/// gcd(R(g4, g9), R(g4, g14)) = 2^15 3^3 5^197 with cofactor 1.
CheckResult verify_resultant_gcd();

/// gcd(g4, g24) = x in characteristic 2 and gcd(g4, g9) = 1 in
/// characteristic 3.
CheckResult verify_char_gcds();

/// lambda_closed == lambda_direct over q in {29, 49, 59, 64, 89}, all
/// valid alpha, with deterministic pseudo-random a.
CheckResult verify_closed_form_equivalence(unsigned samples_per_case = 20,
                                           u64 seed = 0x5eed5);

/// For q in {19, 29, 49} and every a whose y = a^{(q+1)/5} is a
/// nontrivial 5th root of unity: the lambda sum vanishes away from the
/// special alphas and matches the closed forms on them.
CheckResult verify_special_value_pattern();

}  // namespace pb

#endif
