#include "univariate.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "error.hpp"
#include "field.hpp"

namespace lsreal {

// --- rational polynomials ----------------------------------------------------

int uq_degree(const UnivarQ& f) { return static_cast<int>(f.size()) - 1; }
int uz_degree(const UnivarZ& f) { return static_cast<int>(f.size()) - 1; }
int uf_degree(const UnivarFp& f) { return static_cast<int>(f.size()) - 1; }

void uq_normalize(UnivarQ& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

UnivarQ uq_monic(const UnivarQ& f) {
    if (f.empty()) return f;
    UnivarQ r = f;
    mpq_class lead = r.back();
    for (auto& c : r) c /= lead;
    return r;
}

UnivarQ uq_derivative(const UnivarQ& f) {
    UnivarQ r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<long>(i));
    uq_normalize(r);
    return r;
}

UnivarQ uq_mul(const UnivarQ& a, const UnivarQ& b) {
    if (a.empty() || b.empty()) return {};
    UnivarQ r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uq_normalize(r);
    return r;
}

UnivarQ uq_add(const UnivarQ& a, const UnivarQ& b) {
    UnivarQ r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    uq_normalize(r);
    return r;
}

UnivarQ uq_scale(const UnivarQ& a, const mpq_class& c) {
    if (sgn(c) == 0) return {};
    UnivarQ r = a;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<UnivarQ, UnivarQ> uq_divmod(const UnivarQ& a, const UnivarQ& b) {
    if (b.empty()) fail(ErrorCode::invalid_argument, "univariate division by zero");
    UnivarQ rem = a, quot;
    int db = uq_degree(b);
    if (uq_degree(a) >= db) quot.assign(a.size() - b.size() + 1, mpq_class(0));
    while (uq_degree(rem) >= db) {
        int k = uq_degree(rem) - db;
        mpq_class c = rem.back() / b.back();
        quot[k] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= c * b[i];
        uq_normalize(rem);
    }
    uq_normalize(quot);
    return {quot, rem};
}

UnivarQ uq_gcd_monic(UnivarQ a, UnivarQ b) {
    uq_normalize(a);
    uq_normalize(b);
    while (!b.empty()) {
        UnivarQ r = uq_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : uq_monic(a);
}

UnivarQ uq_squarefree_part(const UnivarQ& f) {
    if (uq_degree(f) <= 0) return uq_monic(f);
    UnivarQ g = uq_gcd_monic(f, uq_derivative(f));
    return uq_monic(uq_divmod(f, g).first);
}

mpq_class uq_eval(const UnivarQ& f, const mpq_class& x) {
    mpq_class acc(0);
    for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

std::string uq_to_text(const UnivarQ& f, const std::string& var) {
    if (f.empty()) return "0";
    std::string out;
    for (size_t i = f.size(); i-- > 0;) {
        if (sgn(f[i]) == 0) continue;
        mpq_class mag = abs(f[i]);
        bool first = out.empty();
        if (first) {
            if (sgn(f[i]) < 0) out += "-";
        } else {
            out += sgn(f[i]) < 0 ? " - " : " + ";
        }
        if (mag != 1 || i == 0) out += mag.get_str();
        if (i > 0) {
            if (mag != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

// --- integer model -----------------------------------------------------------

UnivarZ uz_from_q(const UnivarQ& f) {
    UnivarZ r;
    if (f.empty()) return r;
    mpz_class common_den(1);
    for (const auto& c : f) common_den = lcm(common_den, c.get_den());
    mpz_class content(0);
    for (const auto& c : f) {
        mpz_class v = c.get_num() * (common_den / c.get_den());
        content = gcd(content, v);
    }
    if (content == 0) content = 1;
    for (const auto& c : f) r.push_back(c.get_num() * (common_den / c.get_den()) / content);
    if (r.back() < 0)
        for (auto& v : r) v = -v;
    return r;
}

UnivarQ uq_from_z(const UnivarZ& f) {
    UnivarQ r;
    for (const auto& c : f) r.push_back(mpq_class(c));
    return r;
}

UnivarZ uz_mul(const UnivarZ& a, const UnivarZ& b) {
    if (a.empty() || b.empty()) return {};
    UnivarZ r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::optional<UnivarZ> uz_divide_exact(const UnivarZ& a, const UnivarZ& b) {
    if (b.empty()) return std::nullopt;
    UnivarZ rem = a, quot;
    int db = uz_degree(b);
    if (uz_degree(a) < db) return std::nullopt;
    quot.assign(a.size() - b.size() + 1, mpz_class(0));
    while (static_cast<int>(rem.size()) - 1 >= db) {
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(), b.back().get_mpz_t());
        if (r != 0) return std::nullopt;
        int k = static_cast<int>(rem.size()) - 1 - db;
        quot[k] = q;
        for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= q * b[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.empty()) break;
        if (static_cast<int>(rem.size()) - 1 < db) return std::nullopt;
    }
    if (!rem.empty()) return std::nullopt;
    return quot;
}

mpz_class uz_resultant(const UnivarZ& f, const UnivarZ& g) {
    int df = uz_degree(f), dg = uz_degree(g);
    if (df < 0 || dg < 0) return 0;
    if (df == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), dg);
        return r;
    }
    if (dg == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), df);
        return r;
    }
    int size = df + dg;
    std::vector<std::vector<mpz_class>> m(size, std::vector<mpz_class>(size, mpz_class(0)));
    for (int row = 0; row < dg; ++row)
        for (int i = 0; i <= df; ++i) m[row][row + i] = f[df - i];
    for (int row = 0; row < df; ++row)
        for (int i = 0; i <= dg; ++i) m[dg + row][row + i] = g[dg - i];

    // Bareiss fraction-free elimination
    mpz_class denom(1);
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < size; ++r)
                if (m[r][k] != 0) { swap_row = r; break; }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / denom;
            }
            m[i][k] = 0;
        }
        denom = m[k][k];
    }
    return sign * m[size - 1][size - 1];
}

mpz_class uz_discriminant(const UnivarZ& f) {
    int d = uz_degree(f);
    if (d < 1) return 0;
    mpz_class res = uz_resultant(f, [&] {
        UnivarZ df;
        for (size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<long>(i));
        while (!df.empty() && df.back() == 0) df.pop_back();
        return df;
    }());
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), res.get_mpz_t(), f.back().get_mpz_t());
    if (r != 0) fail(ErrorCode::internal, "discriminant division not exact");
    return (d % 4 == 2 || d % 4 == 3) ? mpz_class(-q) : q;
}

// --- F_p helpers --------------------------------------------------------------

namespace {

void uf_normalize(UnivarFp& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

UnivarFp uf_mul(const UnivarFp& a, const UnivarFp& b, const PrimeField& F) {
    if (a.empty() || b.empty()) return {};
    UnivarFp r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    uf_normalize(r);
    return r;
}

UnivarFp uf_sub(const UnivarFp& a, const UnivarFp& b, const PrimeField& F) {
    UnivarFp r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    uf_normalize(r);
    return r;
}

UnivarFp uf_mod(UnivarFp a, const UnivarFp& b, const PrimeField& F) {
    uf_normalize(a);
    int db = uf_degree(b);
    if (db < 0) fail(ErrorCode::invalid_argument, "mod by zero polynomial");
    std::uint64_t inv = F.inv(b.back());
    while (uf_degree(a) >= db) {
        std::uint64_t c = F.mul(a.back(), inv);
        int k = uf_degree(a) - db;
        for (size_t i = 0; i < b.size(); ++i) a[k + i] = F.sub(a[k + i], F.mul(c, b[i]));
        uf_normalize(a);
    }
    return a;
}

UnivarFp uf_monic(const UnivarFp& f, const PrimeField& F) {
    if (f.empty()) return f;
    UnivarFp r = f;
    std::uint64_t inv = F.inv(r.back());
    for (auto& c : r) c = F.mul(c, inv);
    return r;
}

UnivarFp uf_derivative(const UnivarFp& f, const PrimeField& F) {
    UnivarFp r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(F.mul(f[i], i % F.p));
    uf_normalize(r);
    return r;
}

// quotient of exact division a / b in F_p[x]
UnivarFp uf_div_exact(UnivarFp a, const UnivarFp& b, const PrimeField& F) {
    uf_normalize(a);
    int db = uf_degree(b);
    UnivarFp quot(std::max<size_t>(a.size(), b.size()), 0);
    std::uint64_t inv = F.inv(b.back());
    while (uf_degree(a) >= db) {
        std::uint64_t c = F.mul(a.back(), inv);
        int k = uf_degree(a) - db;
        quot[k] = c;
        for (size_t i = 0; i < b.size(); ++i) a[k + i] = F.sub(a[k + i], F.mul(c, b[i]));
        uf_normalize(a);
    }
    if (!a.empty()) fail(ErrorCode::internal, "division in F_p[x] was not exact");
    uf_normalize(quot);
    return quot;
}

// x^e mod f
UnivarFp uf_x_power_mod(std::uint64_t e, const UnivarFp& f, const PrimeField& F) {
    UnivarFp base = uf_mod({0, 1}, f, F);
    UnivarFp result = uf_mod({1}, f, F);
    while (e) {
        if (e & 1) result = uf_mod(uf_mul(result, base, F), f, F);
        base = uf_mod(uf_mul(base, base, F), f, F);
        e >>= 1;
    }
    return result;
}

UnivarFp uf_pow_mod(UnivarFp base, std::uint64_t e, const UnivarFp& f, const PrimeField& F) {
    UnivarFp result = uf_mod({1}, f, F);
    base = uf_mod(std::move(base), f, F);
    while (e) {
        if (e & 1) result = uf_mod(uf_mul(result, base, F), f, F);
        base = uf_mod(uf_mul(base, base, F), f, F);
        e >>= 1;
    }
    return result;
}

} // namespace

UnivarFp uf_gcd(UnivarFp a, UnivarFp b, std::uint64_t p) {
    PrimeField F(p);
    uf_normalize(a);
    uf_normalize(b);
    while (!b.empty()) {
        UnivarFp r = uf_mod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : uf_monic(a, F);
}

std::optional<UnivarFp> uz_mod_p(const UnivarZ& f, std::uint64_t p) {
    if (f.empty()) return std::nullopt;
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class lead = f.back() % pz;
    if (lead == 0) return std::nullopt;
    UnivarFp r;
    for (const auto& c : f) {
        mpz_class v = c % pz;
        if (v < 0) v += pz;
        r.push_back(v.get_ui());
    }
    return r;
}

std::optional<int> count_roots_mod_p(const UnivarZ& f, std::uint64_t p) {
    UnivarZ g = f;
    while (!g.empty()) {
        mpz_class lead = g.back() % mpz_class(static_cast<unsigned long>(p));
        if (lead != 0) break;
        g.pop_back();
    }
    if (g.empty()) return std::nullopt; // identically zero mod p
    auto fp = uz_mod_p(g, p);
    PrimeField F(p);
    if (uf_degree(*fp) == 0) return 0;
    UnivarFp xp = uf_x_power_mod(p, *fp, F);
    UnivarFp diff = uf_sub(xp, {0, 1}, F);
    UnivarFp d = uf_gcd(*fp, diff, p);
    return uf_degree(d);
}

std::vector<std::uint64_t> roots_mod_p(const UnivarZ& f, std::uint64_t p) {
    std::vector<std::uint64_t> roots;
    auto fp = uz_mod_p(f, p);
    PrimeField F(p);
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        if (fp) {
            for (size_t i = fp->size(); i-- > 0;) acc = F.add(F.mul(acc, x), (*fp)[i]);
        } else {
            // degenerate leading coefficients: evaluate the integer poly
            mpz_class v(0), xz(static_cast<unsigned long>(x)), pz(static_cast<unsigned long>(p));
            for (size_t i = f.size(); i-- > 0;) v = (v * xz + f[i]) % pz;
            if (v < 0) v += pz;
            acc = v.get_ui();
        }
        if (acc == 0) roots.push_back(x);
    }
    return roots;
}

std::optional<std::vector<int>> factor_degrees_mod_p(const UnivarZ& f, std::uint64_t p) {
    auto fp0 = uz_mod_p(f, p);
    if (!fp0) return std::nullopt;
    PrimeField F(p);
    UnivarFp fp = uf_monic(*fp0, F);
    if (uf_degree(uf_gcd(fp, uf_derivative(fp, F), p)) > 0) return std::nullopt;
    std::vector<int> degrees;
    UnivarFp remaining = fp;
    UnivarFp power = uf_mod({0, 1}, remaining, F); // x^(p^d) mod remaining, d = 0 so far
    for (int d = 1; uf_degree(remaining) > 0; ++d) {
        if (2 * d > uf_degree(remaining)) {
            degrees.push_back(uf_degree(remaining));
            break;
        }
        power = uf_pow_mod(power, p, remaining, F);
        UnivarFp g = uf_gcd(remaining, uf_sub(power, {0, 1}, F), p);
        if (uf_degree(g) > 0) {
            for (int k = 0; k < uf_degree(g) / d; ++k) degrees.push_back(d);
            remaining = uf_monic(uf_div_exact(remaining, g, F), F);
            if (uf_degree(remaining) == 0) break;
            power = uf_mod(power, remaining, F);
        }
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

// --- factorization over Q -----------------------------------------------------

namespace {

// Berlekamp factorization of a monic squarefree polynomial over F_p.
std::vector<UnivarFp> berlekamp(const UnivarFp& f, const PrimeField& F) {
    int d = uf_degree(f);
    if (d <= 1) return {f};
    const std::uint64_t p = F.p;

    // columns of B: x^(i*p) mod f
    std::vector<UnivarFp> cols(d);
    UnivarFp xp = uf_x_power_mod(p, f, F);
    UnivarFp cur = uf_mod({1}, f, F);
    for (int i = 0; i < d; ++i) {
        cols[i] = cur;
        cols[i].resize(d, 0);
        cur = uf_mod(uf_mul(cur, xp, F), f, F);
    }
    // kernel of (B - I)
    std::vector<std::vector<std::uint64_t>> m(d, std::vector<std::uint64_t>(d, 0));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) m[i][j] = F.sub(cols[j][i], i == j ? 1 : 0);
    std::vector<int> pivot_col_of_row;
    int rank = 0;
    for (int col = 0; col < d && rank < d; ++col) {
        int sel = -1;
        for (int row = rank; row < d; ++row)
            if (m[row][col]) { sel = row; break; }
        if (sel < 0) continue;
        std::swap(m[sel], m[rank]);
        std::uint64_t inv = F.inv(m[rank][col]);
        for (int j = 0; j < d; ++j) m[rank][j] = F.mul(m[rank][j], inv);
        for (int row = 0; row < d; ++row) {
            if (row == rank || !m[row][col]) continue;
            std::uint64_t c = m[row][col];
            for (int j = 0; j < d; ++j) m[row][j] = F.sub(m[row][j], F.mul(c, m[rank][j]));
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }
    std::vector<UnivarFp> kernel;
    std::vector<bool> is_pivot(d, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;
    for (int col = 0; col < d; ++col) {
        if (is_pivot[col]) continue;
        UnivarFp v(d, 0);
        v[col] = 1;
        for (int row = 0; row < rank; ++row) v[pivot_col_of_row[row]] = F.neg(m[row][col]);
        uf_normalize(v);
        kernel.push_back(std::move(v));
    }
    // the kernel contains the constants, so its dimension is the factor count
    size_t factor_count = static_cast<size_t>(d - rank);

    std::vector<UnivarFp> factors = {uf_monic(f, F)};
    for (const UnivarFp& v : kernel) {
        if (uf_degree(v) < 1) continue;
        if (factors.size() == factor_count) break;
        std::vector<UnivarFp> next;
        for (const UnivarFp& u : factors) {
            if (uf_degree(u) <= 1) {
                next.push_back(u);
                continue;
            }
            UnivarFp rest = u;
            for (std::uint64_t c = 0; c < p && uf_degree(rest) > 0; ++c) {
                UnivarFp shifted = uf_mod(v, rest, F);
                if (shifted.empty())
                    shifted = {F.sub(0, c)};
                else {
                    shifted.resize(std::max<size_t>(shifted.size(), 1), 0);
                    shifted[0] = F.sub(shifted[0], c);
                    uf_normalize(shifted);
                }
                UnivarFp g = uf_gcd(rest, shifted, p);
                if (uf_degree(g) > 0 && uf_degree(g) < uf_degree(rest)) {
                    next.push_back(g);
                    rest = uf_div_exact(rest, g, F);
                }
            }
            if (uf_degree(rest) > 0) next.push_back(uf_monic(rest, F));
        }
        factors = std::move(next);
    }
    return factors;
}

struct LiftPair {
    UnivarZ g, h; // monic, coefficients in [0, pk)
};

UnivarZ lift_coeffs(const UnivarFp& f) {
    UnivarZ r;
    for (std::uint64_t c : f) r.push_back(mpz_class(static_cast<unsigned long>(c)));
    return r;
}

UnivarZ uz_mul_mod(const UnivarZ& a, const UnivarZ& b, const mpz_class& pk) {
    UnivarZ r = uz_mul(a, b);
    for (auto& c : r) {
        c %= pk;
        if (c < 0) c += pk;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Lifts f = g0*h0 (mod p) to f = g*h (mod p^k); f, g0, h0 monic.
LiftPair hensel_pair(const UnivarZ& f, const UnivarFp& g0, const UnivarFp& h0, std::uint64_t p,
                     int k) {
    PrimeField F(p);
    // Bezout: s*g0 + t*h0 = 1 in F_p[x]
    UnivarFp s, t;
    {
        UnivarFp r0 = g0, r1 = h0;
        UnivarFp s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
        while (!r1.empty()) {
            // r0 = q*r1 + r2
            UnivarFp rem = r0, q(std::max<size_t>(r0.size(), r1.size()), 0);
            std::uint64_t inv = F.inv(r1.back());
            while (uf_degree(rem) >= uf_degree(r1)) {
                std::uint64_t c = F.mul(rem.back(), inv);
                int sh = uf_degree(rem) - uf_degree(r1);
                q[sh] = F.add(q[sh], c);
                for (size_t i = 0; i < r1.size(); ++i) rem[sh + i] = F.sub(rem[sh + i], F.mul(c, r1[i]));
                uf_normalize(rem);
            }
            uf_normalize(q);
            UnivarFp s2 = uf_sub(s0, uf_mul(q, s1, F), F);
            UnivarFp t2 = uf_sub(t0, uf_mul(q, t1, F), F);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 is a nonzero constant since gcd(g0,h0) = 1
        std::uint64_t inv = F.inv(r0[0]);
        for (auto& c : s0) c = F.mul(c, inv);
        for (auto& c : t0) c = F.mul(c, inv);
        s = std::move(s0);
        t = std::move(t0);
    }

    UnivarZ g = lift_coeffs(g0), h = lift_coeffs(h0);
    mpz_class pm(static_cast<unsigned long>(p));
    mpz_class pz(static_cast<unsigned long>(p));
    for (int m = 1; m < k; ++m) {
        mpz_class pm1 = pm * pz;
        // e = (f - g*h)/p^m mod p
        UnivarZ prod = uz_mul(g, h);
        UnivarFp e;
        {
            size_t len = std::max(f.size(), prod.size());
            for (size_t i = 0; i < len; ++i) {
                mpz_class diff = (i < f.size() ? f[i] : mpz_class(0)) - (i < prod.size() ? prod[i] : mpz_class(0));
                mpz_class quot, rem;
                mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), diff.get_mpz_t(), pm.get_mpz_t());
                if (rem != 0) fail(ErrorCode::internal, "hensel: defect not divisible by p^m");
                mpz_class val = quot % pz;
                if (val < 0) val += pz;
                e.push_back(val.get_ui());
            }
            uf_normalize(e);
        }
        if (!e.empty()) {
            // u = t*e mod g0 ; w = (e - u*h0)/g0
            UnivarFp u = uf_mod(uf_mul(t, e, F), g0, F);
            UnivarFp w = uf_div_exact(uf_sub(e, uf_mul(u, h0, F), F), g0, F);
            for (size_t i = 0; i < u.size(); ++i) {
                if (i >= g.size()) g.resize(i + 1, mpz_class(0));
                g[i] = (g[i] + pm * mpz_class(static_cast<unsigned long>(u[i]))) % pm1;
            }
            for (size_t i = 0; i < w.size(); ++i) {
                if (i >= h.size()) h.resize(i + 1, mpz_class(0));
                h[i] = (h[i] + pm * mpz_class(static_cast<unsigned long>(w[i]))) % pm1;
            }
        }
        pm = pm1;
    }
    return {g, h};
}

// Lifts the full factorization of monic f (known mod p) to mod p^k.
std::vector<UnivarZ> hensel_tree(const UnivarZ& f, std::vector<UnivarFp> facs, std::uint64_t p, int k) {
    if (facs.size() == 1) {
        UnivarZ r = f;
        mpz_class pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
        for (auto& c : r) {
            c %= pk;
            if (c < 0) c += pk;
        }
        return {r};
    }
    PrimeField F(p);
    size_t half = facs.size() / 2;
    std::vector<UnivarFp> left(facs.begin(), facs.begin() + half);
    std::vector<UnivarFp> right(facs.begin() + half, facs.end());
    UnivarFp g0 = {1}, h0 = {1};
    for (const auto& x : left) g0 = uf_mul(g0, x, F);
    for (const auto& x : right) h0 = uf_mul(h0, x, F);
    LiftPair pair = hensel_pair(f, g0, h0, p, k);
    std::vector<UnivarZ> out = hensel_tree(pair.g, std::move(left), p, k);
    std::vector<UnivarZ> more = hensel_tree(pair.h, std::move(right), p, k);
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

// Monic squarefree integer polynomial -> monic irreducible integer factors.
std::vector<UnivarZ> factor_monic_squarefree(const UnivarZ& f) {
    int d = uz_degree(f);
    if (d <= 1) return {f};

    std::uint64_t p = 0;
    std::vector<UnivarFp> modular;
    for (std::uint64_t candidate : small_primes()) {
        if (candidate == 2) continue;
        auto fp = uz_mod_p(f, candidate);
        if (!fp) continue;
        PrimeField F(candidate);
        if (uf_degree(uf_gcd(*fp, uf_derivative(*fp, F), candidate)) > 0) continue;
        p = candidate;
        modular = berlekamp(uf_monic(*fp, F), F);
        break;
    }
    if (p == 0) fail(ErrorCode::internal, "no squarefree prime found for factorization");
    if (modular.size() == 1) return {f};
    std::sort(modular.begin(), modular.end());

    // coefficient bound for monic factors (Mignotte, generous)
    mpz_class height(0);
    for (const auto& c : f) height = std::max(height, mpz_class(abs(c)));
    mpz_class bound = (height + 1) * (d + 1);
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(d + 1));
    bound *= two_pow;
    int k = 1;
    mpz_class pk(static_cast<unsigned long>(p));
    while (pk <= 2 * bound) {
        pk *= static_cast<unsigned long>(p);
        ++k;
    }

    std::vector<UnivarZ> lifted = hensel_tree(f, modular, p, k);

    auto balanced = [&](UnivarZ v) {
        for (auto& c : v) {
            c %= pk;
            if (c < 0) c += pk;
            if (2 * c > pk) c -= pk;
        }
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };

    std::vector<UnivarZ> result;
    UnivarZ current = f;
    std::vector<int> alive(lifted.size());
    for (size_t i = 0; i < lifted.size(); ++i) alive[i] = static_cast<int>(i);

    for (size_t take = 1; take <= alive.size() && 2 * take <= alive.size() + 1;) {
        bool found = false;
        std::vector<int> combo(take);
        std::function<bool(size_t, size_t)> choose = [&](size_t start, size_t depth) -> bool {
            if (depth == take) {
                UnivarZ candidate = {mpz_class(1)};
                for (size_t i = 0; i < take; ++i) candidate = uz_mul_mod(candidate, lifted[combo[i]], pk);
                candidate = balanced(candidate);
                if (candidate.empty() || candidate.back() != 1) return false;
                auto quot = uz_divide_exact(current, candidate);
                if (!quot) return false;
                result.push_back(candidate);
                current = *quot;
                std::vector<int> next_alive;
                for (int idx : alive) {
                    bool used = false;
                    for (size_t i = 0; i < take; ++i)
                        if (combo[i] == idx) used = true;
                    if (!used) next_alive.push_back(idx);
                }
                alive = std::move(next_alive);
                return true;
            }
            for (size_t pos = start; pos < alive.size(); ++pos) {
                combo[depth] = alive[pos];
                if (choose(pos + 1, depth + 1)) return true;
            }
            return false;
        };
        found = choose(0, 0);
        if (!found) ++take;
    }
    if (uz_degree(current) > 0) result.push_back(current);
    std::sort(result.begin(), result.end(), [](const UnivarZ& a, const UnivarZ& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return result;
}

} // namespace

std::vector<UnivarQ> factor_squarefree_rational(const UnivarQ& f) {
    std::vector<UnivarQ> out;
    if (uq_degree(f) <= 0) return out;
    if (uq_degree(f) == 1) {
        out.push_back(uq_monic(f));
        return out;
    }
    UnivarZ F = uz_from_q(f);
    // G(y) = lc^(d-1) * F(y/lc) is monic; factors map back via y = lc*x
    mpz_class lc = F.back();
    int d = uz_degree(F);
    UnivarZ G(F.size());
    G[d] = 1;
    mpz_class scale(1);
    for (int i = d - 1; i >= 0; --i) {
        G[i] = F[i] * scale;
        scale *= lc;
    }
    std::vector<UnivarZ> monic_factors = factor_monic_squarefree(G);
    for (const UnivarZ& g : monic_factors) {
        UnivarQ q;
        mpq_class pow(1);
        for (size_t i = 0; i < g.size(); ++i) {
            q.push_back(mpq_class(g[i]) * pow);
            pow *= mpq_class(lc);
        }
        out.push_back(uq_monic(q));
    }
    std::sort(out.begin(), out.end(), [](const UnivarQ& a, const UnivarQ& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

UnivarQ affine_canonical(const UnivarQ& f0) {
    UnivarQ f = uq_monic(f0);
    int d = uq_degree(f);
    if (d < 1) return f;
    if (d == 1) return {mpq_class(0), mpq_class(1)}; // every linear is x

    // depress: substitute x -> x - a_(d-1)/d
    mpq_class shift = -f[d - 1] / d;
    UnivarQ depressed(d + 1, mpq_class(0));
    // binomial expansion of (x + shift)^i
    std::vector<std::vector<mpq_class>> binom_pow(d + 1);
    for (int i = 0; i <= d; ++i) {
        UnivarQ power = {mpq_class(1)};
        UnivarQ base = {shift, mpq_class(1)};
        for (int k = 0; k < i; ++k) power = uq_mul(power, base);
        power.resize(d + 1, mpq_class(0));
        binom_pow[i] = power;
    }
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) depressed[j] += f[i] * binom_pow[i][j];
    uq_normalize(depressed);

    // weighted-primitive scaling: c_i (coefficient of x^(d-i)) transforms as
    // c_i * mu^i; pick integer exponents m_q = max_i ceil(-e_(q,i)/i) per prime
    auto ord = [](mpz_class v, const mpz_class& q) {
        int e = 0;
        if (v == 0) return 0;
        v = abs(v);
        while (v % q == 0) { v /= q; ++e; }
        return e;
    };
    std::vector<std::pair<int, mpq_class>> nonzero; // (i, c_i)
    for (int i = 2; i <= d; ++i) {
        mpq_class c = (d - i >= 0 && d - i < static_cast<int>(depressed.size())) ? depressed[d - i] : mpq_class(0);
        if (sgn(c) != 0) nonzero.emplace_back(i, c);
    }
    if (nonzero.empty()) {
        UnivarQ xd(d + 1, mpq_class(0));
        xd[d] = 1;
        return xd;
    }

    std::vector<mpz_class> prime_set;
    for (auto& [i, c] : nonzero) {
        for (mpz_class v : {mpz_class(c.get_num()), mpz_class(c.get_den())}) {
            v = abs(v);
            for (std::uint64_t q : small_primes()) {
                mpz_class qz(static_cast<unsigned long>(q));
                while (v % qz == 0) {
                    if (std::find(prime_set.begin(), prime_set.end(), qz) == prime_set.end())
                        prime_set.push_back(qz);
                    v /= qz;
                }
            }
            if (v > 1 && std::find(prime_set.begin(), prime_set.end(), v) == prime_set.end())
                prime_set.push_back(v); // large prime remainder
        }
    }

    mpq_class mu(1);
    for (const mpz_class& q : prime_set) {
        int m = INT32_MIN;
        for (auto& [i, c] : nonzero) {
            int e = ord(c.get_num(), q) - ord(c.get_den(), q);
            // smallest integer with e + i*need >= 0
            int need = 0;
            while (e + i * need < 0) ++need;
            while (e + i * (need - 1) >= 0) --need;
            m = std::max(m, need);
        }
        mpq_class qq(q);
        if (m >= 0)
            for (int k = 0; k < m; ++k) mu *= qq;
        else
            for (int k = 0; k < -m; ++k) mu /= qq;
    }

    // sign: make the first odd-index coefficient positive
    int sign = 1;
    for (auto& [i, c] : nonzero) {
        if (i % 2 == 1) {
            mpq_class scaled = c;
            for (int k = 0; k < i; ++k) scaled *= mu;
            sign = sgn(scaled) < 0 ? -1 : 1;
            break;
        }
    }
    if (sign < 0) mu = -mu;

    UnivarQ canon(d + 1, mpq_class(0));
    canon[d] = 1;
    for (auto& [i, c] : nonzero) {
        mpq_class scaled = c;
        for (int k = 0; k < i; ++k) scaled *= mu;
        canon[d - i] = scaled;
    }
    return canon;
}

bool affine_equivalent(const UnivarQ& f, const UnivarQ& g) {
    if (uq_degree(f) != uq_degree(g)) return false;
    return affine_canonical(f) == affine_canonical(g);
}

bool same_field_fingerprint(const UnivarQ& f, const UnivarQ& g, std::uint64_t prime_bound) {
    int d = uq_degree(f);
    if (d != uq_degree(g)) return false;
    if (d <= 1) return true;
    if (affine_equivalent(f, g)) return true;
    UnivarZ fi = uz_from_q(f), gi = uz_from_q(g);
    mpz_class bad = uz_discriminant(fi) * uz_discriminant(gi) * fi.back() * gi.back();
    int compared = 0;
    for (std::uint64_t p : small_primes()) {
        if (p > prime_bound) break;
        if (bad % mpz_class(static_cast<unsigned long>(p)) == 0) continue;
        auto pf = factor_degrees_mod_p(fi, p);
        auto pg = factor_degrees_mod_p(gi, p);
        if (!pf || !pg) continue;
        if (*pf != *pg) return false;
        ++compared;
    }
    return compared >= 10;
}

const std::vector<std::uint64_t>& small_primes() {
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> out;
        std::vector<bool> sieve(1000, true);
        for (std::uint64_t i = 2; i < sieve.size(); ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = i * i; j < sieve.size(); j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

} // namespace lsreal
