#pragma once
// Dirichlet characters mod a squarefree monic Q over F_q[t], realized through
// the CRT splitting of (F_q[t]/Q)^* into the cyclic unit groups of the factor
// fields. Each factor carries a discrete-log table over a found generator, so
// a character is just an exponent tuple and evaluation is a few table reads.
// Values are complex roots of unity; the final variance identity is recovered
// exactly by rounding against the known denominator. A separate minimal path
// handles the modulus t^m (only for the even-character count), where the
// units split as constants times an elementary abelian group with basis
// 1 + t^j.
#include <cmath>
#include <complex>
#include <memory>
#include <numeric>
#include <vector>
#include "exact.hpp"
#include "fq.hpp"
#include "budget.hpp"

namespace secular {

namespace detail {

inline std::vector<long long> prime_factors_of(long long m) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) out.push_back(m);
    return out;
}

struct CharTableData {
    int q = 0;
    FqPoly Q;
    std::vector<FqPoly> factors;
    std::vector<long long> order;            // q^deg(P_i) - 1
    std::vector<std::vector<long long>> dlog; // per factor, indexed by residue code
    long long L = 1;                          // lcm of the factor orders
    std::vector<long long> stride;            // L / order_i
    long long phi = 1;
    std::vector<long long> unit_dlog;         // dlog of the constant primitive root
};

inline long long residue_code(const FqPoly& r, int q, int deg_bound) {
    long long code = 0;
    for (int i = deg_bound - 1; i >= 0; --i) code = code * q + r.coeff(i);
    return code;
}

} // namespace detail

struct DirichletCharacter {
    std::shared_ptr<const detail::CharTableData> tab;
    std::vector<long long> exps; // exponent on each cyclic factor
    bool principal = false;
    bool even = false;

    // exact root-of-unity index in [0, L), or -1 when gcd(f, Q) != 1
    long long index_of(const FqPoly& f) const {
        const auto& t = *tab;
        long long idx = 0;
        for (size_t i = 0; i < t.factors.size(); ++i) {
            const FqPoly& p = t.factors[i];
            FqPoly r = fq_mod(f, p);
            if (r.is_zero()) return -1;
            long long dl = t.dlog[i][static_cast<size_t>(
                detail::residue_code(r, t.q, p.degree()))];
            idx = (idx + exps[i] % t.order[i] * dl % t.L * (t.stride[i] % t.L)) % t.L;
        }
        return idx;
    }

    std::complex<double> operator()(const FqPoly& f) const {
        long long idx = index_of(f);
        if (idx < 0) return {0.0, 0.0};
        double ang = 2.0 * M_PI * static_cast<double>(idx) / static_cast<double>(tab->L);
        return {std::cos(ang), std::sin(ang)};
    }
};

// All Phi(Q) characters mod a squarefree monic Q, principal included. The
// even flag is exact: a character is even iff it kills the constants, i.e.
// its index at the prime root of Z/q vanishes.
inline std::vector<DirichletCharacter> characters_mod(const FqPoly& Q,
                                                      const Budget& budget = {}) {
    require(Q.is_monic() && Q.degree() >= 1, "modulus must be monic of positive degree");
    require(fq_is_squarefree(Q), "modulus must be squarefree");
    const int q = Q.q;
    auto data = std::make_shared<detail::CharTableData>();
    auto& t = *data;
    t.q = q;
    t.Q = Q;
    t.factors = fq_factor_squarefree(Q);

    for (const FqPoly& p : t.factors) {
        long long block = 1;
        for (int i = 0; i < p.degree(); ++i) block *= q;
        require_budget(block <= budget.max_residue_tables,
                       "factor-field table exceeds budget");
        long long o = block - 1;
        t.order.push_back(o);
        // find a generator of the factor field's unit group
        std::vector<long long> pf = detail::prime_factors_of(o);
        FqPoly gen;
        for (long long c = 1; c < block; ++c) {
            FqPoly cand = residue_of_code(q, p.degree(), c);
            bool ok = true;
            for (long long pr : pf) {
                FqPoly pw = fq_pow_mod(cand, o / pr, p);
                if (pw.degree() == 0 && pw.c[0] == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen = cand;
                break;
            }
        }
        require_verified(!gen.is_zero(), "factor field must have a generator");
        std::vector<long long> dl(static_cast<size_t>(block), -1);
        FqPoly acc = fq_const(q, 1);
        for (long long j = 0; j < o; ++j) {
            dl[static_cast<size_t>(detail::residue_code(acc, q, p.degree()))] = j;
            acc = fq_mod(fq_mul(acc, gen), p);
        }
        t.dlog.push_back(std::move(dl));
        // lcm update
        long long g = std::gcd(t.L, o);
        t.L = t.L / g * o;
        require_budget(t.phi <= budget.max_residue_tables / o,
                       "character count exceeds budget");
        t.phi *= o;
    }
    t.stride.resize(t.factors.size());
    for (size_t i = 0; i < t.factors.size(); ++i) t.stride[i] = t.L / t.order[i];

    const int g0 = primitive_root(q);
    t.unit_dlog.resize(t.factors.size());
    for (size_t i = 0; i < t.factors.size(); ++i) {
        FqPoly c0 = fq_const(q, g0);
        t.unit_dlog[i] = t.dlog[i][static_cast<size_t>(
            detail::residue_code(fq_mod(c0, t.factors[i]), q, t.factors[i].degree()))];
    }

    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<size_t>(t.phi));
    std::vector<long long> e(t.factors.size(), 0);
    for (long long count = 0; count < t.phi; ++count) {
        DirichletCharacter ch;
        ch.tab = data;
        ch.exps = e;
        ch.principal = true;
        long long idx0 = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) ch.principal = false;
            idx0 = (idx0 + e[i] * t.unit_dlog[i] % t.L * (t.stride[i] % t.L)) % t.L;
        }
        ch.even = (idx0 == 0);
        out.push_back(std::move(ch));
        for (size_t i = 0; i < e.size(); ++i) {
            if (++e[i] < t.order[i]) break;
            e[i] = 0;
        }
    }
    return out;
}

inline long long phi_of(const std::vector<DirichletCharacter>& chars) {
    require(!chars.empty(), "character list must be nonempty");
    return chars.front().tab->phi;
}

// Coefficient of u^n in L(u, chi)^k, where L(u, chi) truncates at degree
// deg Q - 1 for non-principal chi; the degree-deg Q coefficient is computed
// and checked to vanish.
inline std::complex<double> m_coefficient(const DirichletCharacter& chi, int n, int k) {
    require(!chi.principal, "the principal character is excluded");
    require(n >= 0 && k >= 1, "need n >= 0 and k >= 1");
    const auto& t = *chi.tab;
    const int q = t.q;
    const int dq = t.Q.degree();
    std::vector<std::complex<double>> L(dq + 1, {0.0, 0.0});
    for (int d = 0; d <= dq; ++d) {
        long long block = 1;
        for (int i = 0; i < d; ++i) block *= q;
        std::complex<double> s(0.0, 0.0);
        for (long long c = 0; c < block; ++c) s += chi(monic_of_code(q, d, c));
        L[d] = s;
    }
    require_verified(std::abs(L[dq]) <= 1e-9 * std::max(1.0, std::pow(q, dq)),
                     "L-polynomial must truncate below deg Q for non-principal characters");
    L.pop_back();
    // raise to the k-th power, tracking only degrees <= n
    std::vector<std::complex<double>> pw(1, {1.0, 0.0});
    for (int rep = 0; rep < k; ++rep) {
        std::vector<std::complex<double>> nx(std::min<size_t>(pw.size() + dq - 1, n + 1),
                                             {0.0, 0.0});
        for (size_t i = 0; i < pw.size(); ++i)
            for (size_t j = 0; j < L.size() && i + j < nx.size(); ++j)
                nx[i + j] += pw[i] * L[j];
        pw = std::move(nx);
    }
    if (static_cast<size_t>(n) >= pw.size()) return {0.0, 0.0};
    return pw[static_cast<size_t>(n)];
}

// Progression variance through the character orthogonality route:
// (1/Phi^2) sum over non-principal chi of |M(n; d_k chi)|^2, rounded onto the
// exact denominator Phi^3 shared with the direct enumeration.
inline Rational ap_variance_characters(int q, const FqPoly& Q, int n, int k,
                                       const Budget& budget = {}) {
    require(Q.q == q, "modulus field does not match q");
    require(Q.degree() >= 2, "modulus degree must be at least 2");
    std::vector<DirichletCharacter> chars = characters_mod(Q, budget);
    const long long phi = phi_of(chars);
    long long block = 1;
    for (int i = 0; i < Q.degree(); ++i) block *= q;
    require_budget(phi <= budget.max_ff_codes / block,
                   "character sweep exceeds budget");
    double acc = 0.0;
    for (const DirichletCharacter& ch : chars) {
        if (ch.principal) continue;
        std::complex<double> m = m_coefficient(ch, n, k);
        acc += std::norm(m);
    }
    const double phid = static_cast<double>(phi);
    double scaled = acc * phid; // Var * Phi^3 = (acc / Phi^2) * Phi^3
    require_budget(std::abs(scaled) < 9.0e15, "variance numerator exceeds safe rounding range");
    long long nearest = std::llround(scaled);
    require_verified(std::abs(scaled - static_cast<double>(nearest)) <=
                         1e-6 * std::max(1.0, std::abs(scaled)),
                     "character variance must round onto the exact denominator");
    BigInt num(static_cast<long>(nearest));
    BigInt den = BigInt(static_cast<long>(phi));
    return make_rational(num, den * den * den);
}

// Minimal unit-group model mod t^m with q >= m: units are a constant from
// Z/q^* times the elementary abelian group generated by 1 + t^j. Used only to
// count even characters by explicit evaluation at the constants.
struct TmCharacter {
    int q = 0;
    int m = 0;
    long long a0 = 0;              // exponent on the constant generator
    std::vector<long long> a;      // exponents on 1 + t^j, j = 1..m-1
};

namespace detail {

// decompose a unit u mod t^m as (constant, exponents on 1 + t^j)
inline std::pair<int, std::vector<int>> tm_decompose(const FqPoly& u, int m) {
    const int q = u.q;
    int c = u.coeff(0);
    require(c != 0, "argument must be a unit mod t^m");
    FqPoly tm = fq_monomial(q, m);
    FqPoly v = fq_mod(fq_mul(u, fq_const(q, inv_mod(c, q))), tm);
    std::vector<int> b(m, 0);
    for (int j = 1; j < m; ++j) {
        b[j] = v.coeff(j);
        if (b[j] != 0) {
            FqPoly basis = fq_add(fq_const(q, 1), fq_monomial(q, j));
            v = fq_mod(fq_mul(v, fq_pow_mod(basis, q - b[j], tm)), tm);
        }
    }
    return {c, b};
}

} // namespace detail

inline std::vector<TmCharacter> tm_characters(int q, int m, const Budget& budget = {}) {
    require(is_prime(static_cast<long long>(q)), "field order must be prime");
    require(m >= 1, "modulus exponent must be at least 1");
    require(q >= m, "unit group is elementary abelian only for q >= m");
    long long count = q - 1;
    for (int j = 1; j < m; ++j) {
        require_budget(count <= budget.max_residue_tables / q,
                       "character count exceeds budget");
        count *= q;
    }
    std::vector<TmCharacter> out;
    out.reserve(static_cast<size_t>(count));
    TmCharacter ch;
    ch.q = q;
    ch.m = m;
    ch.a.assign(m > 1 ? m - 1 : 0, 0);
    for (long long i = 0; i < count; ++i) {
        out.push_back(ch);
        if (++ch.a0 < q - 1) continue;
        ch.a0 = 0;
        for (size_t j = 0; j < ch.a.size(); ++j) {
            if (++ch.a[j] < q) break;
            ch.a[j] = 0;
        }
    }
    return out;
}

inline std::complex<double> tm_char_eval(const TmCharacter& ch, const FqPoly& u) {
    require(u.q == ch.q, "argument field does not match the character");
    auto [c, b] = detail::tm_decompose(u, ch.m);
    const int g0 = primitive_root(ch.q);
    long long dl = -1;
    {
        long long acc = 1;
        for (long long j = 0; j < ch.q - 1; ++j) {
            if (acc == c) {
                dl = j;
                break;
            }
            acc = acc * g0 % ch.q;
        }
    }
    require_verified(dl >= 0, "constant part must have a discrete log");
    double ang = 2.0 * M_PI * static_cast<double>(ch.a0 * dl % (ch.q - 1)) /
                 static_cast<double>(ch.q - 1);
    for (size_t j = 0; j < ch.a.size(); ++j)
        ang += 2.0 * M_PI *
               static_cast<double>(ch.a[j] * b[j + 1] % ch.q) / static_cast<double>(ch.q);
    return {std::cos(ang), std::sin(ang)};
}

// Count characters mod t^m that are trivial on every nonzero constant, by
// explicit evaluation; the expected count is q^(m-1).
inline long long even_character_count_tm(int q, int m, const Budget& budget = {}) {
    std::vector<TmCharacter> chars = tm_characters(q, m, budget);
    long long evens = 0;
    for (const TmCharacter& ch : chars) {
        bool even = true;
        for (int c = 1; c < q && even; ++c) {
            std::complex<double> v = tm_char_eval(ch, fq_const(q, c));
            if (std::abs(v - std::complex<double>(1.0, 0.0)) > 1e-9) even = false;
        }
        if (even) ++evens;
    }
    return evens;
}

} // namespace secular
