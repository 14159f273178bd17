#ifndef PB_SYMBOLIC_HPP
#define PB_SYMBOLIC_HPP

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pb/gf.hpp"

namespace pb {

using Int = mpz_class;
using Rat = mpq_class;  // kept canonical by GMP: gcd(num, den) = 1, den > 0

/// Dense polynomial with exact rational coefficients, ascending order,
/// no trailing zeros.
struct QPoly {
    std::vector<Rat> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Rat coeff(std::size_t i) const { return i < c.size() ? c[i] : Rat(0); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool operator==(const QPoly& o) const { return c == o.c; }
};

/// Dense polynomial with exact integer coefficients.  Content and sign
/// are kept as given; no implicit normalization.
struct ZPoly {
    std::vector<Int> c;

    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
    static ZPoly from_longs(const std::vector<long>& v);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Int coeff(std::size_t i) const { return i < c.size() ? c[i] : Int(0); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool operator==(const ZPoly& o) const { return c == o.c; }
};

/// Generalized binomial coefficient C(x, n) = x(x-1)...(x-n+1)/n! over Q.
Rat gen_binomial(const Rat& x, u32 n);

/// The double binomial sum behind the alpha-indexed closed form, as an
/// exact polynomial of degree 5*alpha + 4 in v:
///   sum_{i=0}^{alpha} (-1)^i C(alpha,i) sum_{l=0}^{4} C(i+(4a-1+l)/5, alpha) v^{5i+l}
/// Requires alpha > 0 and alpha + 1 divisible by 5.
QPoly expand_lambda_poly(u32 alpha);

/// Exact-division error; remainder is kept as the falsifier.
struct ExactDivisionError : std::runtime_error {
    QPoly remainder;
    explicit ExactDivisionError(QPoly rem)
        : std::runtime_error("poly_div_exact: nonzero remainder"), remainder(std::move(rem)) {}
};

/// Quotient with exactly zero remainder; throws ExactDivisionError
/// carrying the remainder otherwise.
QPoly poly_div_exact(const QPoly& num, const QPoly& den);

struct GPoly {
    u32 e = 0;   // 5-power cleared from the denominators
    ZPoly g;
};

/// Divides expand_lambda_poly(alpha) by v(1+v+v^2+v^3+v^4), asserts every
/// denominator of the quotient is a pure power of 5 (e = the max power),
/// and returns g with integer coefficients carrying the sign
/// (-1)^{(alpha+1)/5 + 1} that matches the published tables.
GPoly extract_g(u32 alpha);

/// Exact resultant as the determinant of the standard Sylvester matrix
/// (f rows first), computed by fraction-free elimination with
/// deterministic row pivoting.
Int resultant(const ZPoly& f, const ZPoly& g);

/// Coefficientwise reduction into F_p (negative coefficients mapped to
/// their nonnegative residues).
FpPoly zpoly_mod_p(const ZPoly& f, u32 p);

struct Factorization {
    std::map<u64, u32> factors;
    Int cofactor;  // +-1 when fully factored; keeps the sign of n
};

/// Trial division by every prime <= bound.
Factorization factor_small(const Int& n, u64 bound);

/// Fixture polynomial for alpha in {4, 9, 14, 24}, loaded once from the
/// fixture file and cached.  Invalid alpha is rejected.
const ZPoly& fixture_g(u32 alpha);

/// Parse a fixture file (records "g <alpha> <degree>" followed by one
/// decimal coefficient per line, ascending; trailing whole-file checksum
/// line).  Throws on malformed records or checksum mismatch.
std::map<u32, ZPoly> load_fixture_file(const std::string& path);

/// Directory holding g_poly_fixtures.txt: the PB_FIXTURE_DIR environment
/// variable if set, else the compiled-in default.
std::string fixture_dir();
void set_fixture_dir(const std::string& dir);

}  // namespace pb

#endif
