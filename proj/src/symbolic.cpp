#include "pb/symbolic.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#ifndef PB_DEFAULT_FIXTURE_DIR
#define PB_DEFAULT_FIXTURE_DIR "data"
#endif

namespace pb {

ZPoly ZPoly::from_longs(const std::vector<long>& v) {
    std::vector<Int> c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return ZPoly(std::move(c));
}

Rat gen_binomial(const Rat& x, u32 n) {
    Rat r(1);
    Rat t = x;
    for (u32 k = 0; k < n; ++k) {
        r *= t;
        t -= 1;
    }
    for (u32 k = 1; k <= n; ++k) r /= Rat(static_cast<long>(k));
    return r;
}

QPoly expand_lambda_poly(u32 alpha) {
    if (alpha == 0 || (alpha + 1) % 5 != 0)
        throw std::invalid_argument("expand_lambda_poly: alpha+1 must be a positive multiple of 5");
    std::vector<Rat> c(5 * static_cast<std::size_t>(alpha) + 5, Rat(0));
    Int binom_ai = 1;  // C(alpha, i), updated incrementally
    for (u32 i = 0; i <= alpha; ++i) {
        for (u32 l = 0; l < 5; ++l) {
            Rat upper = Rat(static_cast<long>(i)) + Rat(4L * alpha - 1 + l, 5);
            Rat term = Rat(binom_ai) * gen_binomial(upper, alpha);
            if (i & 1) term = -term;
            c[5 * static_cast<std::size_t>(i) + l] += term;
        }
        if (i < alpha) {
            binom_ai *= (alpha - i);
            binom_ai /= (i + 1);
        }
    }
    return QPoly(std::move(c));
}

QPoly poly_div_exact(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("poly_div_exact: zero divisor");
    std::vector<Rat> rem = num.c;
    if (num.degree() < den.degree()) {
        if (!num.is_zero()) throw ExactDivisionError(num);
        return QPoly();
    }
    std::vector<Rat> quo(num.degree() - den.degree() + 1, Rat(0));
    const Rat lead = den.c.back();
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
        Rat f = rem[k + den.degree()] / lead;
        quo[k] = f;
        if (f == 0) continue;
        for (std::size_t t = 0; t < den.c.size(); ++t)
            rem[k + t] -= f * den.c[t];
    }
    QPoly r(std::move(rem));
    if (!r.is_zero()) throw ExactDivisionError(r);
    return QPoly(std::move(quo));
}

GPoly extract_g(u32 alpha) {
    QPoly P = expand_lambda_poly(alpha);
    QPoly den(std::vector<Rat>{Rat(0), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
    QPoly quo = poly_div_exact(P, den);

    u32 e = 0;
    for (const Rat& r : quo.c) {
        Int d = r.get_den();
        u32 v5 = 0;
        while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
            d /= 5;
            ++v5;
        }
        if (d != 1) {
            std::ostringstream os;
            os << "extract_g: quotient denominator " << r.get_den().get_str()
               << " is not a power of 5 (alpha=" << alpha << ")";
            throw std::runtime_error(os.str());
        }
        if (v5 > e) e = v5;
    }

    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 5, e);
    const bool flip = ((alpha + 1) / 5) % 2 == 0;  // sign (-1)^{(alpha+1)/5 + 1}
    std::vector<Int> g;
    g.reserve(quo.c.size());
    for (const Rat& r : quo.c) {
        Rat v = r * Rat(scale);
        Int num = v.get_num();
        if (flip) num = -num;
        g.push_back(num);
    }
    return {e, ZPoly(std::move(g))};
}

Int resultant(const ZPoly& f, const ZPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant: inputs must be nonzero");
    const int m = f.degree(), n = g.degree();
    const int N = m + n;
    if (N == 0) return Int(1);  // two nonzero constants
    // Sylvester matrix, f rows first, descending coefficients.
    std::vector<std::vector<Int>> M(N, std::vector<Int>(N, Int(0)));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k) M[row][row + k] = f.c[m - k];
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k) M[n + row][row + k] = g.c[n - k];

    // Bareiss fraction-free elimination; pivot = first nonzero entry
    // below the diagonal (deterministic).
    int sign = 1;
    Int prev(1);
    for (int k = 0; k + 1 < N; ++k) {
        int piv = -1;
        for (int r = k; r < N; ++r)
            if (M[r][k] != 0) { piv = r; break; }
        if (piv < 0) return Int(0);
        if (piv != k) {
            std::swap(M[piv], M[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                Int t = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign > 0 ? M[N - 1][N - 1] : Int(-M[N - 1][N - 1]);
}

FpPoly zpoly_mod_p(const ZPoly& f, u32 p) {
    if (!is_prime(p)) throw std::invalid_argument("zpoly_mod_p: p not prime");
    FpPoly r(p);
    r.coeffs.reserve(f.c.size());
    Int m(static_cast<unsigned long>(p));
    for (const Int& c : f.c) {
        Int red;
        mpz_fdiv_r(red.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        r.coeffs.push_back(static_cast<u32>(red.get_ui()));
    }
    r.trim();
    return r;
}

Factorization factor_small(const Int& n, u64 bound) {
    if (n == 0) throw std::invalid_argument("factor_small: n must be nonzero");
    if (bound < 2) throw std::invalid_argument("factor_small: bound must be >= 2");
    Factorization out;
    Int rest = abs(n);
    for (u64 d = 2; d <= bound; d += (d == 2 ? 1 : 2)) {
        if (!is_prime(d)) continue;
        u32 e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(d))) {
            rest /= static_cast<unsigned long>(d);
            ++e;
        }
        if (e) out.factors[d] = e;
        if (rest == 1) break;
    }
    out.cofactor = (n < 0) ? Int(-rest) : rest;
    return out;
}

// ---------------------------------------------------------------------
// fixture file

namespace {

std::mutex g_fixture_mutex;
std::string g_fixture_dir;

u64 fnv1a64(const std::string& s) {
    u64 h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::map<u32, ZPoly> load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("fixture_g: cannot open " + path);
    std::map<u32, ZPoly> out;
    std::string body, line;
    u32 cur_alpha = 0;
    long remaining = 0;
    std::vector<Int> coeffs;
    bool saw_checksum = false;
    auto flush = [&] {
        if (remaining > 0) throw std::runtime_error("fixture_g: truncated record");
        if (!coeffs.empty()) out[cur_alpha] = ZPoly(std::move(coeffs));
        coeffs.clear();
    };
    while (std::getline(in, line)) {
        if (line.rfind("checksum ", 0) == 0) {
            std::istringstream is(line);
            std::string kw, algo, hex;
            is >> kw >> algo >> hex;
            if (algo != "fnv1a64") throw std::runtime_error("fixture_g: unknown checksum algorithm");
            char buf[17];
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(body)));
            if (hex != buf) throw std::runtime_error("fixture_g: checksum mismatch in " + path);
            saw_checksum = true;
            continue;
        }
        body += line;
        body += '\n';
        if (line.rfind("g ", 0) == 0) {
            flush();
            std::istringstream is(line);
            std::string kw;
            long deg = -1;
            is >> kw >> cur_alpha >> deg;
            if (!is || deg < 0) throw std::runtime_error("fixture_g: bad record header: " + line);
            remaining = deg + 1;
            coeffs.reserve(remaining);
        } else if (!line.empty()) {
            if (remaining <= 0) throw std::runtime_error("fixture_g: coefficient outside record");
            coeffs.emplace_back(line);
            --remaining;
        }
    }
    flush();
    if (!saw_checksum) throw std::runtime_error("fixture_g: missing checksum line in " + path);
    return out;
}

}  // namespace

std::string fixture_dir() {
    std::lock_guard<std::mutex> lk(g_fixture_mutex);
    if (!g_fixture_dir.empty()) return g_fixture_dir;
    if (const char* env = std::getenv("PB_FIXTURE_DIR"); env && *env) return env;
    return PB_DEFAULT_FIXTURE_DIR;
}

void set_fixture_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lk(g_fixture_mutex);
    g_fixture_dir = dir;
}

const ZPoly& fixture_g(u32 alpha) {
    static std::map<u32, ZPoly> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lk(m);
    if (cache.empty())
        cache = load_fixtures(fixture_dir() + "/g_poly_fixtures.txt");
    auto it = cache.find(alpha);
    if (it == cache.end())
        throw std::invalid_argument("fixture_g: no fixture for alpha=" + std::to_string(alpha));
    return it->second;
}

}  // namespace pb
