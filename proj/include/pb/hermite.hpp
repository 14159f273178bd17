#ifndef PB_HERMITE_HPP
#define PB_HERMITE_HPP

#include <vector>

#include "pb/binomial.hpp"
#include "pb/gf.hpp"

namespace pb {

/// The multiples of q+1 inside [(r-1)(alpha+1) - rq, (r-1)alpha - 1],
/// strictly increasing.
struct GammaSet {
    u32 q = 0;
    u32 alpha = 0;
    u32 r = 0;
    std::vector<i64> members;
};

GammaSet gamma(u32 q, u32 alpha, u32 r);

/// C(n, m) mod p by base-p digit products; 0 when m < 0 or m > n.
u32 lucas_binomial(u64 n, i64 m, u32 p);

struct LambdaValue {
    FieldElem value;
    u64 term_count = 0;  // number of (i, j) index pairs visited
};

/// The field-valued sum over pairs (i, j) with -alpha-1+r(i-j) in the
/// gamma window:  sum C(alpha,i) C(q-1-alpha,j) a^{-i-jq}.  Iteration is
/// window-element outer, i inner.
LambdaValue lambda_direct(const FieldCtx& F, u32 q, u32 alpha, FieldElem a, u32 r);

/// Brute-force sum of f(x)^s over all of F_{q^2} (f(x) = 0 contributes 0
/// for s >= 1).
FieldElem power_sum(const BinomialSpec& spec, u64 s);

/// Closed form of the lambda sum for r = 5, routed through the integer
/// coefficient table of extract_g so only inverses of 5 are needed:
///   sigma * (-a)^{((alpha+1)/5) q} * w(1+w+w^2+w^3+w^4) * 5^{-e} * g(w)
/// with w = a^{-q(q+1)/5} and sigma the sign convention of extract_g.
/// Requires 5 | q+1, alpha > 0, 5 | alpha+1, q >= 4*alpha + 8.
FieldElem lambda_closed(const FieldCtx& F, u32 q, u32 alpha, FieldElem a);

/// The alpha values where the gamma window holds only four consecutive
/// multiples of q+1 (so the root-of-unity sum does not telescope to 0):
/// the integers among (q-3)/4, (q-1)/2, (3q-1)/4.  Empty for even q.
std::vector<u32> special_alphas(u32 q);

/// Closed form of the lambda sum at a special alpha when y = a^{(q+1)/5}
/// is a nontrivial 5th root of unity:
///   alpha = (q-1)/2 :  -a^{-(alpha+1)/5} (y^{-1} + 1 + y + y^2)
///   alpha = (q-3)/4 :  -a^{-(alpha+1)/5} (1 + y + y^2 + y^3)
///   alpha = (3q-1)/4:  -a^{-(alpha+1)/5} (y^{-2} + y^{-1} + 1 + y)
FieldElem lambda_special(const FieldCtx& F, u32 q, u32 alpha, FieldElem a);

/// Permutation test by the power-sum criterion: zero_only_root(spec) and
/// lambda_direct(q, alpha, a, r) = 0 for every 0 <= alpha <= q-1.  Exists
/// for cross-validation of is_permutation, not for speed.
bool hermite_check(const BinomialSpec& spec);

}  // namespace pb

#endif
