#include "pb/gf.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace pb {

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<u64, u32>> factor_u64(u64 n) {
    std::vector<std::pair<u64, u32>> out;
    for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            u32 e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

PrimePower::PrimePower(u32 p_, u32 n_) : p(p_), n(n_) {
    if (!is_prime(p)) throw std::invalid_argument("PrimePower: p is not prime");
    if (n == 0) throw std::invalid_argument("PrimePower: exponent must be positive");
    u64 acc = 1;
    for (u32 i = 0; i < n; ++i) {
        acc *= p;
        if (acc > 0xFFFFFFFFull) throw std::invalid_argument("PrimePower: q overflows");
    }
    q = static_cast<u32>(acc);
}

PrimePower PrimePower::from_q(u32 q) {
    if (q < 2) throw std::invalid_argument("PrimePower: q < 2");
    auto fac = factor_u64(q);
    if (fac.size() != 1) throw std::invalid_argument("PrimePower: not a prime power");
    return PrimePower(static_cast<u32>(fac[0].first), fac[0].second);
}

FpPoly::FpPoly(u32 p_, std::vector<long> c) : p(p_) {
    coeffs.reserve(c.size());
    for (long v : c) {
        long r = v % static_cast<long>(p);
        if (r < 0) r += p;
        coeffs.push_back(static_cast<u32>(r));
    }
    trim();
}

void FpPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string FpPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || coeffs[i] != 1) s += std::to_string(coeffs[i]);
        if (i >= 1) {
            if (coeffs[i] != 1) s += "*";
            s += "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s;
}

static void check_same_p(const FpPoly& a, const FpPoly& b) {
    if (a.p != b.p) throw std::invalid_argument("FpPoly: characteristic mismatch");
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
    check_same_p(a, b);
    FpPoly r(a.p);
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = (a.coeff(i) + b.coeff(i)) % a.p;
    r.trim();
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    check_same_p(a, b);
    FpPoly r(a.p);
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = (a.coeff(i) + a.p - b.coeff(i)) % a.p;
    r.trim();
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    check_same_p(a, b);
    if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.p);
    FpPoly r(a.p);
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        u64 ai = a.coeffs[i];
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] = static_cast<u32>((r.coeffs[i + j] + ai * b.coeffs[j]) % a.p);
    }
    r.trim();
    return r;
}

static u32 mod_inv(u32 a, u32 p) {
    // p prime, a != 0
    u64 r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<u32>(r);
}

std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b) {
    check_same_p(a, b);
    if (b.is_zero()) throw std::invalid_argument("FpPoly: division by zero");
    if (a.degree() < b.degree()) return {FpPoly::zero(a.p), a};
    const u32 p = a.p;
    FpPoly rem = a;
    FpPoly quo(p);
    quo.coeffs.assign(a.degree() - b.degree() + 1, 0);
    const u32 lcinv = mod_inv(b.coeffs.back(), p);
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        u32 c = static_cast<u32>(static_cast<u64>(rem.coeff(k + b.degree())) * lcinv % p);
        quo.coeffs[k] = c;
        if (c == 0) continue;
        for (std::size_t t = 0; t < b.coeffs.size(); ++t) {
            u64 sub = static_cast<u64>(c) * b.coeffs[t] % p;
            u32& slot = rem.coeffs[k + t];
            slot = static_cast<u32>((slot + p - sub) % p);
        }
    }
    rem.trim();
    quo.trim();
    return {quo, rem};
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    check_same_p(a, b);
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("fp_gcd: both inputs zero");
    while (!b.is_zero()) {
        FpPoly r = fp_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    // make monic
    if (!a.is_zero() && a.coeffs.back() != 1) {
        u32 inv = mod_inv(a.coeffs.back(), a.p);
        for (u32& c : a.coeffs) c = static_cast<u32>(static_cast<u64>(c) * inv % a.p);
    }
    return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod) {
    return fp_divrem(fp_mul(a, b), mod).second;
}

FpPoly fp_powmod(const FpPoly& a, u64 e, const FpPoly& mod) {
    FpPoly r = FpPoly::one(a.p);
    FpPoly base = fp_divrem(a, mod).second;
    while (e) {
        if (e & 1) r = fp_mulmod(r, base, mod);
        base = fp_mulmod(base, base, mod);
        e >>= 1;
    }
    return r;
}

bool is_irreducible(const FpPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("is_irreducible: degree must be >= 1");
    if (!f.is_monic()) throw std::invalid_argument("is_irreducible: input must be monic");
    const int d = f.degree();
    if (d == 1) return true;
    const FpPoly x = FpPoly::x(f.p);
    // t = x^{p^k} mod f; any common factor with f below degree d/2 shows up
    // as a nontrivial gcd with t - x.
    FpPoly t = x;
    for (int k = 1; k <= d / 2; ++k) {
        t = fp_powmod(t, f.p, f);
        if (fp_gcd(fp_sub(t, x), f).degree() > 0) return false;
    }
    return true;
}

FpPoly find_irreducible(u32 p, u32 d) {
    if (!is_prime(p)) throw std::invalid_argument("find_irreducible: p not prime");
    if (d < 1) throw std::invalid_argument("find_irreducible: d must be >= 1");
    u64 count = 1;
    for (u32 i = 0; i < d; ++i) count *= p;
    for (u64 tail = 0; tail < count; ++tail) {
        FpPoly cand(p);
        cand.coeffs.assign(d + 1, 0);
        u64 t = tail;
        for (u32 i = 0; i < d; ++i) { cand.coeffs[i] = static_cast<u32>(t % p); t /= p; }
        cand.coeffs[d] = 1;
        if (is_irreducible(cand)) return cand;
    }
    throw std::logic_error("find_irreducible: unreachable");  // irreducibles exist in every degree
}

FieldCtx::FieldCtx(u32 p, u32 d, u64 size_cap) : p_(p), d_(d) {
    if (!is_prime(p)) throw std::invalid_argument("FieldCtx: p not prime");
    if (d < 1) throw std::invalid_argument("FieldCtx: degree must be >= 1");
    q_ = 1;
    for (u32 i = 0; i < d; ++i) {
        q_ *= p;
        if (q_ > size_cap) throw std::invalid_argument("FieldCtx: p^d exceeds size cap");
    }
    modulus_ = find_irreducible(p, d);

    const u64 m = q_ - 1;
    // canonical generator: first element (by index) of order m
    auto fac = factor_u64(m == 0 ? 1 : m);
    u32 gen = 1;
    if (m > 1) {
        for (u32 cand = 2; cand < q_; ++cand) {
            bool ok = true;
            for (auto& [ell, e] : fac) {
                // cand^(m/ell) == 1 means order < m
                u64 ex = m / ell;
                u32 acc = 1, base = cand;
                while (ex) {
                    if (ex & 1) acc = raw_mul(acc, base);
                    base = raw_mul(base, base);
                    ex >>= 1;
                }
                if (acc == 1) { ok = false; break; }
            }
            if (ok) { gen = cand; break; }
        }
    }
    gen_ = {gen};

    exp_.resize(m ? m : 1);
    log_.assign(q_, 0);
    u32 cur = 1;
    for (u64 i = 0; i < (m ? m : 1); ++i) {
        exp_[i] = cur;
        log_[cur] = static_cast<u32>(i);
        cur = raw_mul(cur, gen);
    }
    if (cur != 1) throw std::logic_error("FieldCtx: generator order mismatch");
}

u32 FieldCtx::raw_mul(u32 a, u32 b) const {
    if (a == 0 || b == 0) return 0;
    auto decode = [&](u32 v) {
        FpPoly f(p_);
        while (v) { f.coeffs.push_back(v % p_); v /= p_; }
        return f;
    };
    FpPoly prod = fp_mulmod(decode(a), decode(b), modulus_);
    u32 idx = 0;
    for (std::size_t i = prod.coeffs.size(); i-- > 0;) idx = idx * p_ + prod.coeffs[i];
    return idx;
}

FieldElem FieldCtx::element(long c) const {
    long r = c % static_cast<long>(p_);
    if (r < 0) r += p_;
    return {static_cast<u32>(r)};
}

FieldElem FieldCtx::from_index(u64 idx) const {
    if (idx >= q_) throw std::out_of_range("FieldCtx: element index out of range");
    return {static_cast<u32>(idx)};
}

FieldElem FieldCtx::from_coeffs(const std::vector<u32>& c) const {
    if (c.size() > d_) throw std::invalid_argument("FieldCtx: too many coefficients");
    u64 idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw std::invalid_argument("FieldCtx: coefficient out of range");
        idx = idx * p_ + c[i];
    }
    return {static_cast<u32>(idx)};
}

std::vector<u32> FieldCtx::coeffs(FieldElem x) const {
    std::vector<u32> c(d_);
    u32 v = x.v;
    for (u32 i = 0; i < d_; ++i) { c[i] = v % p_; v /= p_; }
    return c;
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
    if (p_ == 2) return {a.v ^ b.v};
    u32 x = a.v, y = b.v, out = 0, mult = 1;
    for (u32 i = 0; i < d_; ++i) {
        out += (x % p_ + y % p_) % p_ * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return {out};
}

FieldElem FieldCtx::neg(FieldElem a) const {
    if (p_ == 2) return a;
    u32 x = a.v, out = 0, mult = 1;
    for (u32 i = 0; i < d_; ++i) {
        out += (p_ - x % p_) % p_ * mult;
        x /= p_;
        mult *= p_;
    }
    return {out};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    const u64 m = q_ - 1;
    u64 s = static_cast<u64>(log_[a.v]) + log_[b.v];
    if (s >= m) s -= m;
    return {exp_[s]};
}

FieldElem FieldCtx::inv(FieldElem a) const {
    if (a.v == 0) throw std::domain_error("FieldCtx: inversion of zero");
    const u64 m = q_ - 1;
    u64 l = log_[a.v];
    return {exp_[l == 0 ? 0 : m - l]};
}

FieldElem FieldCtx::pow(FieldElem a, i64 e) const {
    if (e < 0) {
        a = inv(a);  // throws on zero
        // -e is safe: |e| < 2^63 in all callers, and -INT64_MIN is avoided
        // by the unsigned negation below.
        u64 ue = static_cast<u64>(-(e + 1)) + 1;
        FieldElem r = one(), base = a;
        while (ue) {
            if (ue & 1) r = mul(r, base);
            base = mul(base, base);
            ue >>= 1;
        }
        return r;
    }
    if (a.v == 0) return e == 0 ? one() : zero();
    FieldElem r = one(), base = a;
    u64 ue = static_cast<u64>(e);
    while (ue) {
        if (ue & 1) r = mul(r, base);
        base = mul(base, base);
        ue >>= 1;
    }
    return r;
}

FieldElem FieldCtx::pow(FieldElem a, const mpz_class& e) const {
    if (a.v == 0) {
        if (e == 0) return one();
        if (e > 0) return zero();
        throw std::domain_error("FieldCtx: inversion of zero");
    }
    mpz_class m(static_cast<unsigned long>(q_ - 1));
    mpz_class red;
    mpz_fdiv_r(red.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());  // always nonnegative
    return pow(a, static_cast<i64>(red.get_ui()));
}

u64 FieldCtx::element_order(FieldElem x) const {
    if (x.v == 0) throw std::domain_error("FieldCtx: order of zero");
    const u64 m = q_ - 1;
    if (m == 0) return 1;
    return m / std::gcd(m, static_cast<u64>(log_[x.v]));
}

u64 FieldCtx::log(FieldElem x) const {
    if (x.v == 0) throw std::domain_error("FieldCtx: log of zero");
    return log_[x.v];
}

FieldElem FieldCtx::eval_fp_poly(const FpPoly& f, FieldElem x) const {
    if (f.p != p_) throw std::invalid_argument("eval_fp_poly: characteristic mismatch");
    FieldElem acc = zero();
    for (std::size_t i = f.coeffs.size(); i-- > 0;)
        acc = add(mul(acc, x), element(static_cast<long>(f.coeffs[i])));
    return acc;
}

}  // namespace pb
