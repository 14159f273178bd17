#ifndef PB_GF_HPP
#define PB_GF_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pb {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n);

/// Trial-division factorization of a machine integer, (prime, exponent)
/// pairs in ascending prime order.
std::vector<std::pair<u64, u32>> factor_u64(u64 n);

/// A prime power q = p^n with p checked prime.
struct PrimePower {
    u32 p = 0;
    u32 n = 0;
    u32 q = 0;

    PrimePower() = default;
    PrimePower(u32 p_, u32 n_);

    /// Recognize q as p^n; throws std::invalid_argument if q is not a
    /// prime power.
    static PrimePower from_q(u32 q);
};

/// Dense polynomial over F_p: ascending coefficients in [0,p), no
/// trailing zeros.  The zero polynomial has an empty coefficient list.
struct FpPoly {
    u32 p = 0;
    std::vector<u32> coeffs;

    FpPoly() = default;
    explicit FpPoly(u32 p_) : p(p_) {}
    FpPoly(u32 p_, std::vector<long> c);

    static FpPoly zero(u32 p) { return FpPoly(p); }
    static FpPoly one(u32 p) { return FpPoly(p, {1}); }
    static FpPoly x(u32 p) { return FpPoly(p, {0, 1}); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
    u32 coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }

    void trim();
    std::string to_string() const;

    bool operator==(const FpPoly& o) const { return p == o.p && coeffs == o.coeffs; }
};

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
/// Quotient and remainder; divisor must be nonzero.
std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b);
/// Monic gcd; gcd(f, 0) = monic(f).  Both zero is rejected.
FpPoly fp_gcd(FpPoly a, FpPoly b);
FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod);
FpPoly fp_powmod(const FpPoly& a, u64 e, const FpPoly& mod);

/// True iff the monic f of degree >= 1 has no factor of degree in
/// [1, deg f / 2], tested via gcd(x^{p^k} - x mod f, f).
bool is_irreducible(const FpPoly& f);

/// Lexicographically smallest monic irreducible of degree d over F_p,
/// ordering the non-leading coefficients as a base-p integer (constant
/// term least significant).  Deterministic.
FpPoly find_irreducible(u32 p, u32 d);

/// Element of a FieldCtx, stored as the canonical index: the coefficient
/// vector w.r.t. the power basis read as a base-p integer.  Plain data;
/// meaningful only together with the context that produced it.
struct FieldElem {
    u32 v = 0;
    bool operator==(const FieldElem&) const = default;
};

/// Explicit GF(p^d): a fixed monic irreducible modulus plus exp/log
/// tables over a canonical generator.  Immutable after construction and
/// safe to share across threads.
class FieldCtx {
  public:
    static constexpr u64 kDefaultSizeCap = u64(1) << 20;

    FieldCtx(u32 p, u32 d, u64 size_cap = kDefaultSizeCap);

    u32 p() const { return p_; }
    u32 degree() const { return d_; }
    u64 size() const { return q_; }
    const FpPoly& modulus() const { return modulus_; }
    FieldElem generator() const { return gen_; }

    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {1}; }
    /// Embed a prime-field constant (any integer, reduced mod p).
    FieldElem element(long c) const;
    FieldElem from_index(u64 idx) const;
    FieldElem from_coeffs(const std::vector<u32>& c) const;
    std::vector<u32> coeffs(FieldElem x) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    /// Throws std::domain_error on zero input.
    FieldElem inv(FieldElem a) const;
    /// Square-and-multiply; negative e is inv-then-pow and requires a != 0.
    FieldElem pow(FieldElem a, i64 e) const;
    /// Arbitrary-precision exponent, reduced mod p^d - 1 for nonzero a.
    FieldElem pow(FieldElem a, const mpz_class& e) const;

    /// Least k >= 1 with x^k = 1; throws on zero input.
    u64 element_order(FieldElem x) const;
    /// Horner evaluation of a prime-field polynomial at x; f.p must
    /// match the context characteristic.
    FieldElem eval_fp_poly(const FpPoly& f, FieldElem x) const;
    /// Discrete log w.r.t. the canonical generator; throws on zero.
    u64 log(FieldElem x) const;

  private:
    u32 p_, d_;
    u64 q_;
    FpPoly modulus_;
    FieldElem gen_;
    std::vector<u32> exp_;  // exp_[i] = index of gen^i, i in [0, q-1)
    std::vector<u32> log_;  // inverse of exp_; log_[0] unused

    u32 raw_mul(u32 a, u32 b) const;  // table-free, used during setup
};

}  // namespace pb

#endif
