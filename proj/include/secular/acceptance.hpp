#pragma once
// The release gate: ten numbered checks covering the closed forms, the
// generating functions, the exact piecewise reconstruction, the Monte-Carlo
// estimators, the finite-field theorems, the Euler-product constant, and the
// Riemann-sum limit. Each check reports pass/fail with a short detail string;
// tolerances are fixed here, not configurable.
#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <vector>
#include "exact.hpp"
#include "csvout.hpp"
#include "moments.hpp"
#include "haar.hpp"
#include "gamma.hpp"
#include "dk_sieve.hpp"
#include "ffvar.hpp"
#include "chars.hpp"

namespace secular {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline DensePoly<Rational> poly_from(const std::vector<Rational>& coeffs) {
    DensePoly<Rational> p;
    for (size_t i = 0; i < coeffs.size(); ++i) p.add_at(i, coeffs[i]);
    return p;
}

template <typename Fn>
inline CriterionResult run_criterion(int index, const std::string& name, Fn&& fn) {
    CriterionResult r;
    r.index = index;
    r.name = name;
    try {
        std::string detail;
        r.pass = fn(detail);
        r.detail = detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

} // namespace detail

// Exact coefficient comparison of the reconstructed gamma_2, gamma_3 pieces
// against their published closed forms. Throws on any mismatch.
inline void printed_piece_regression() {
    PiecewiseGamma g2 = gamma_full(2);
    Rational i6 = make_rational(BigInt(1), BigInt(6));
    DensePoly<Rational> e20 = detail::poly_from({0, 0, 0, i6});
    DensePoly<Rational> e21 = detail::poly_from(
        {Rational(8) * i6, Rational(-12) * i6, Rational(6) * i6, Rational(-1) * i6});
    require_verified(g2.pieces[0] == e20 && g2.pieces[1] == e21,
                     "reconstructed gamma_2 must match its printed pieces");

    PiecewiseGamma g3 = gamma_full(3);
    Rational i8 = make_rational(BigInt(1), factorial(8));
    DensePoly<Rational> e30 = detail::poly_from({0, 0, 0, 0, 0, 0, 0, 0, i8});
    DensePoly<Rational> e31 = detail::poly_from(
        {Rational(-927) * i8, Rational(4392) * i8, Rational(-8484) * i8, Rational(8568) * i8,
         Rational(-4830) * i8, Rational(1512) * i8, Rational(-252) * i8, Rational(24) * i8,
         Rational(-2) * i8});
    DensePoly<Rational> e32;
    for (int j = 0; j <= 8; ++j) {
        Rational c = Rational(binomial(8, j)) * Rational(pow_int(BigInt(3), 8 - j)) * i8;
        if (j % 2 == 1) c = -c;
        e32.add_at(j, c);
    }
    require_verified(g3.pieces[0] == e30 && g3.pieces[1] == e31 && g3.pieces[2] == e32,
                     "reconstructed gamma_3 must match its printed pieces");
}

inline std::vector<CriterionResult> run_acceptance() {
    std::vector<CriterionResult> out;

    // 1: lattice DP equals the low-range binomial form
    out.push_back(detail::run_criterion(1, "dp-matches-low-binomial", [](std::string& d) {
        int checked = 0;
        for (int k : {2, 3, 4})
            for (long long N = 1; N <= 8; ++N) {
                std::vector<BigInt> v = ik_lattice_distribution(k, N);
                for (long long m = 0; m <= N; ++m, ++checked)
                    if (v[m] != binomial(m + k * k - 1, k * k - 1)) return false;
            }
        d = std::to_string(checked) + " grid points, exact";
        return true;
    }));

    // 2: functional equation I_k(m;N) = I_k(kN-m;N)
    out.push_back(detail::run_criterion(2, "dp-functional-equation", [](std::string& d) {
        int checked = 0;
        for (int k : {2, 3, 4})
            for (long long N = 1; N <= 8; ++N) {
                std::vector<BigInt> v = ik_lattice_distribution(k, N);
                const long long kn = k * N;
                for (long long m = 0; m <= kn; ++m, ++checked)
                    if (v[m] != v[kn - m]) return false;
            }
        d = std::to_string(checked) + " grid points, exact";
        return true;
    }));

    // 3: generating-function coefficients equal the table, middle branch included
    out.push_back(detail::run_criterion(3, "generating-function-regression", [](std::string& d) {
        int checked = 0;
        for (int k : {2, 3}) {
            const long long nmax = (k == 2) ? 12 : 10;
            for (long long N = 1; N <= nmax; ++N) {
                MomentTable t = moment_table(k, N);
                DensePoly<Rational> p = pk_closed_form(k, N);
                for (long long m = 0; m <= k * N; ++m, ++checked)
                    if (p.get(m) != Rational(t.values[m])) return false;
                if (k == 3)
                    for (long long m = N + 1; m < 2 * N; ++m, ++checked)
                        if (i3_middle_closed_form(N, m) != t.values[m]) return false;
            }
        }
        d = std::to_string(checked) + " coefficients, exact";
        return true;
    }));

    // 4: reconstructed pieces match the printed piecewise polynomials
    out.push_back(detail::run_criterion(4, "printed-piece-regression", [](std::string& d) {
        printed_piece_regression();
        d = "both piecewise families coefficient-exact";
        return true;
    }));

    // 5: first-piece law c^(k^2-1)/(k^2-1)! up to k = 4
    out.push_back(detail::run_criterion(5, "first-piece-law", [](std::string& d) {
        for (int k = 1; k <= 4; ++k) {
            DensePoly<Rational> piece = gamma_piece(k, 0);
            DensePoly<Rational> law;
            law.add_at(static_cast<size_t>(k * k - 1),
                       make_rational(BigInt(1), factorial(k * k - 1)));
            if (!(piece == law)) return false;
        }
        d = "k = 1..4, coefficient-exact";
        return true;
    }));

    // 6: Monte-Carlo estimators within 4 standard errors at fixed seeds
    out.push_back(detail::run_criterion(6, "monte-carlo-concordance", [](std::string& d) {
        struct IkCase {
            int k;
            long long m;
            int N;
            uint64_t seed;
        };
        std::ostringstream sigmas;
        for (IkCase c : {IkCase{2, 2, 4, 101}, IkCase{2, 3, 5, 102}, IkCase{3, 7, 4, 103}}) {
            McEstimate e = ik_monte_carlo(c.k, c.m, c.N, 200000, c.seed);
            double exact = Rational(ik_value(c.k, c.m, c.N)).get_d();
            double dev = std::abs(e.mean - exact) / e.std_error;
            sigmas << (sigmas.tellp() > 0 ? " " : "") << format_float(dev);
            if (dev > 4.0) return false;
        }
        struct GCase {
            int k;
            double c;
            const char* exact;
            uint64_t seed;
        };
        for (GCase c : {GCase{2, 0.5, "1/48", 7}, GCase{3, 1.5, "103/573440", 8}}) {
            McEstimate e = gamma_monte_carlo(c.k, c.c, 400000, c.seed);
            double exact = parse_rational(c.exact).get_d();
            double dev = std::abs(e.mean - exact) / e.std_error;
            sigmas << " " << format_float(dev);
            if (dev > 4.0) return false;
        }
        d = "max |dev|/stderr per case: " + sigmas.str() + " (cap 4)";
        return true;
    }));

    // 7: finite-field exact identities
    out.push_back(detail::run_criterion(7, "finite-field-identities", [](std::string& d) {
        int checked = 0;
        for (int q : {3, 5})
            for (int k : {2, 3})
                for (int n = 2; n <= 6; ++n) {
                    DivisorTable t = dk_table(q, n, k);
                    BigInt mass(0);
                    for (uint64_t v : t.dk[n]) mass += BigInt(static_cast<unsigned long>(v));
                    long long qn = 1;
                    for (int i = 0; i < n; ++i) qn *= q;
                    if (mass != BigInt(static_cast<long>(qn)) * binomial(n + k - 1, k - 1))
                        return false;
                    ++checked;
                    const int h0 = ((k - 1) * n) / k; // smallest h with zero variance
                    for (int h = h0; h <= n - 2; ++h) {
                        VarianceReport r = short_interval_variance(q, n, h, k);
                        if (!(r.variance == 0)) return false;
                        ++checked;
                    }
                }
        for (int q : {3, 5}) {
            std::vector<FqPoly> mods = {FqPoly(q, {0, 1, 1}),       // t^2 + t
                                        FqPoly(q, {0, 2, 3, 1})};   // t(t+1)(t+2)
            for (const FqPoly& Q : mods)
                for (int k : {2, 3})
                    for (int n = 2; n <= Q.degree() + 1; ++n) {
                        VarianceReport direct = ap_variance_direct(q, Q, n, k);
                        Rational viachars = ap_variance_characters(q, Q, n, k);
                        Rational diff = direct.variance - viachars;
                        double rel = std::abs(Rational(diff).get_d()) /
                                     std::max(1.0, std::abs(direct.variance.get_d()));
                        if (rel > 1e-6) return false;
                        ++checked;
                    }
        }
        d = std::to_string(checked) + " identities";
        return true;
    }));

    // 8: the variance/prediction ratio approaches 1 as q grows
    out.push_back(detail::run_criterion(8, "large-q-trend", [](std::string& d) {
        std::vector<double> devs;
        std::ostringstream line;
        for (int q : {5, 7, 11}) {
            VarianceReport r = short_interval_variance(q, 7, 0, 2);
            double dev = std::abs(r.ratio - 1.0);
            if (dev > 3.0 / std::sqrt(static_cast<double>(q))) return false;
            devs.push_back(dev);
            line << (line.tellp() > 0 ? " " : "") << "q=" << q << ":" << format_float(dev);
        }
        if (!(devs[0] >= devs[1] && devs[1] >= devs[2] && devs[2] < devs[0])) return false;
        d = "|ratio-1| " + line.str() + " (caps 3/sqrt(q), decreasing)";
        return true;
    }));

    // 9: truncated Euler product for k = 2 against 6/pi^2
    out.push_back(detail::run_criterion(9, "euler-product-constant", [](std::string& d) {
        double a2 = a_k_constant(2, 10000);
        double target = 6.0 / (M_PI * M_PI);
        double err = std::abs(a2 - target);
        d = "error " + format_float(err) + " (cap 0.001)";
        return err <= 1e-3;
    }));

    // 10: Riemann sum of the moment sequence against the limit integral
    out.push_back(detail::run_criterion(10, "riemann-sum-limit", [](std::string& d) {
        PiecewiseGamma g2 = gamma_full(2);
        double worst = 0.0;
        for (double alpha : {0.0, 1.0, 2.0})
            for (long long N : {20, 40, 80}) {
                std::complex<double> lhs = w_k_riemann(2, alpha, N);
                std::complex<double> rhs = gamma_fourier_reference(g2, alpha);
                double err = std::abs(lhs - rhs);
                worst = std::max(worst, err * static_cast<double>(N));
                if (err > 10.0 / static_cast<double>(N)) return false;
            }
        d = "max N*error " + format_float(worst) + " (cap 10)";
        return true;
    }));

    return out;
}

} // namespace secular
