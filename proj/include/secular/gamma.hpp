#pragma once
// Reconstruction of the asymptotic coefficient gamma_k(c) of I_k(cN;N) /
// N^(k^2-1). For rational c = p/q the dilate counts I_k(p*l; q*l) follow a
// polynomial in N = q*l of degree k^2-1, so k^2 exact evaluations determine
// it and a (k^2+1)-th serves as a holdout check; gamma_k(c) is its leading
// coefficient. Piecewise assembly, Monte-Carlo cross-check, Euler-product
// constants, variance predictors, and the Fourier/Riemann-sum comparison all
// live here.
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <thread>
#include <vector>
#include "exact.hpp"
#include "interp.hpp"
#include "moments.hpp"
#include "rng.hpp"
#include "budget.hpp"

namespace secular {

struct PiecewiseGamma {
    int k = 0;
    std::vector<DensePoly<Rational>> pieces; // piece r valid on [r, r+1]

    Rational eval_exact(const Rational& c) const {
        require(c >= 0 && c <= k, "gamma argument must lie in [0, k]");
        long r = static_cast<long>(mpz_get_si(BigInt(c.get_num() / c.get_den()).get_mpz_t()));
        if (r >= k) r = k - 1; // right endpoint belongs to the last piece
        return pieces[r].eval(c);
    }

    double eval(double c) const {
        require(c >= 0.0 && c <= static_cast<double>(k), "gamma argument must lie in [0, k]");
        int r = std::min(static_cast<int>(std::floor(c)), k - 1);
        double acc = 0.0;
        const auto& coef = pieces[r].coeffs();
        for (size_t i = coef.size(); i-- > 0;) acc = acc * c + coef[i].get_d();
        return acc;
    }
};

// gamma_k at an exact rational point, via interpolation of dilate counts.
inline Rational gamma_at_rational(int k, const Rational& c, const Budget& budget = {}) {
    require(k >= 1, "gamma requires k >= 1");
    require(c >= 0 && c <= k, "gamma argument must lie in [0, k]");
    require_budget(k <= budget.max_gamma_k, "gamma reconstruction k exceeds budget");
    const long long deg = static_cast<long long>(k) * k - 1;
    const long long nodes = deg + 1; // k^2 interpolation nodes
    BigInt pz = c.get_num(), qz = c.get_den();
    require_budget(qz <= 100000, "gamma denominator exceeds budget");
    const long long p = mpz_get_si(pz.get_mpz_t());
    const long long q = mpz_get_si(qz.get_mpz_t());

    std::vector<Rational> xs, ys;
    xs.reserve(nodes);
    ys.reserve(nodes);
    for (long long l = 1; l <= nodes; ++l) {
        xs.emplace_back(Rational(static_cast<long>(q * l)));
        ys.emplace_back(Rational(ik_value(k, p * l, q * l)));
    }
    DensePoly<Rational> ehrhart = interpolate(xs, ys);
    // holdout dilate: the count law must extend to l = k^2 + 1
    const long long lh = nodes + 1;
    Rational predicted = ehrhart.eval(Rational(static_cast<long>(q * lh)));
    Rational actual(ik_value(k, p * lh, q * lh));
    require_verified(predicted == actual,
                     "dilate interpolant must predict the holdout evaluation");
    return ehrhart.get(static_cast<size_t>(deg));
}

// One polynomial piece of gamma_k on [r, r+1], interpolated at k^2 interior
// rationals r + i/(k^2+1) (breakpoints themselves are avoided).
inline DensePoly<Rational> gamma_piece(int k, int r, const Budget& budget = {}) {
    require(k >= 1, "gamma requires k >= 1");
    require(r >= 0 && r < k, "piece index must lie in [0, k-1]");
    const long long M = static_cast<long long>(k) * k;
    std::vector<Rational> xs, ys;
    xs.reserve(M);
    ys.reserve(M);
    for (long long i = 1; i <= M; ++i) {
        Rational ci = make_rational(BigInt(static_cast<long>(r * (M + 1) + i)), BigInt(static_cast<long>(M + 1)));
        xs.push_back(ci);
        ys.push_back(gamma_at_rational(k, ci, budget));
    }
    return interpolate(xs, ys);
}

namespace detail {

// p(a + b*x) expanded in x
inline DensePoly<Rational> compose_affine(const DensePoly<Rational>& p, const Rational& a,
                                          const Rational& b) {
    DensePoly<Rational> out;
    const auto& coef = p.coeffs();
    for (size_t i = 0; i < coef.size(); ++i) {
        // expand coef[i] * (a + b x)^i
        std::vector<Rational> bin(i + 1);
        for (size_t t = 0; t <= i; ++t)
            bin[t] = Rational(binomial(static_cast<long long>(i), static_cast<long long>(t)));
        std::vector<Rational> bpow(i + 1);
        bpow[0] = Rational(1);
        for (size_t t = 1; t <= i; ++t) bpow[t] = bpow[t - 1] * b;
        std::vector<Rational> apowv(i + 1);
        apowv[0] = Rational(1);
        for (size_t t = 1; t <= i; ++t) apowv[t] = apowv[t - 1] * a;
        for (size_t t = 0; t <= i; ++t)
            out.add_at(t, coef[i] * bin[t] * apowv[i - t] * bpow[t]);
    }
    return out;
}

} // namespace detail

// All pieces of gamma_k with the structural invariants verified on
// construction: first-piece law, breakpoint continuity, reflection symmetry,
// and vanishing at both ends (k >= 2).
inline PiecewiseGamma gamma_full(int k, const Budget& budget = {}) {
    require(k >= 1, "gamma requires k >= 1");
    require_budget(k <= budget.max_gamma_k, "gamma reconstruction k exceeds budget");
    PiecewiseGamma g;
    g.k = k;
    for (int r = 0; r < k; ++r) g.pieces.push_back(gamma_piece(k, r, budget));

    const long long deg = static_cast<long long>(k) * k - 1;
    DensePoly<Rational> first_law;
    first_law.add_at(static_cast<size_t>(deg),
                     make_rational(BigInt(1), factorial(static_cast<unsigned long>(deg))));
    require_verified(g.pieces[0] == first_law,
                     "first piece must equal c^(k^2-1)/(k^2-1)!");
    for (int r = 1; r < k; ++r)
        require_verified(g.pieces[r - 1].eval(Rational(r)) == g.pieces[r].eval(Rational(r)),
                         "adjacent pieces must agree at integer breakpoints");
    for (int r = 0; r < k; ++r) {
        DensePoly<Rational> reflected =
            detail::compose_affine(g.pieces[k - 1 - r], Rational(k), Rational(-1));
        require_verified(g.pieces[r] == reflected,
                         "pieces must be symmetric about c = k/2");
    }
    if (k >= 2) {
        require_verified(g.pieces[0].eval(Rational(0)) == 0, "gamma must vanish at c = 0");
        require_verified(g.pieces[k - 1].eval(Rational(k)) == 0, "gamma must vanish at c = k");
    }
    return g;
}

namespace detail {

// 256-chunk deterministic Monte Carlo over a scalar statistic of the RNG
template <typename Stat>
inline void run_scalar_chunks(long long samples, uint64_t seed, int threads, Stat&& stat,
                              double& sum, double& sumsq) {
    constexpr int kChunks = 256;
    std::vector<std::array<double, 2>> acc(kChunks, {0.0, 0.0});
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    CounterRng root(seed);
    auto work = [&](int first, int last) {
        for (int c = first; c < last; ++c) {
            long long count = samples / kChunks + (c < samples % kChunks ? 1 : 0);
            if (count == 0) continue;
            CounterRng rng = root.split(static_cast<uint64_t>(c));
            for (long long i = 0; i < count; ++i) {
                double v = stat(rng);
                acc[c][0] += v;
                acc[c][1] += v * v;
            }
        }
    };
    if (threads == 1) {
        work(0, kChunks);
    } else {
        std::vector<std::thread> pool;
        int per = (kChunks + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            int first = t * per, last = std::min(kChunks, first + per);
            if (first < last) pool.emplace_back(work, first, last);
        }
        for (auto& th : pool) th.join();
    }
    sum = 0.0;
    sumsq = 0.0;
    for (const auto& a : acc) {
        sum += a[0];
        sumsq += a[1];
    }
}

} // namespace detail

// Monte-Carlo gamma_k(c): sample w_1..w_{k-1} uniform on [0,1], force the
// last coordinate onto the simplex slice w_1+...+w_k = c (zero if it lands
// outside [0,1]), average the squared Vandermonde, and normalize by
// k! * (1! 2! ... (k-1)!)^2.
inline McEstimate gamma_monte_carlo(int k, double c, long long samples, uint64_t seed,
                                    int threads = 0) {
    require(k >= 1, "gamma requires k >= 1");
    require(c > 0.0 && c < static_cast<double>(k),
            "Monte-Carlo gamma needs 0 < c < k (boundary slices have measure zero)");
    require(samples >= 1000, "Monte-Carlo gamma needs at least 1000 samples");
    require_budget(k <= 16, "Monte-Carlo gamma k exceeds budget");
    double barnes = 1.0;
    {
        double f = 1.0;
        for (int i = 1; i < k; ++i) {
            f *= i;
            barnes *= f;
        }
    }
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= i;
    const double scale = 1.0 / (kfact * barnes * barnes);

    double sum = 0.0, sumsq = 0.0;
    detail::run_scalar_chunks(
        samples, seed, threads,
        [&](CounterRng& rng) -> double {
            double w[16];
            double tot = 0.0;
            for (int i = 0; i + 1 < k; ++i) {
                w[i] = rng.next_unit();
                tot += w[i];
            }
            w[k - 1] = c - tot;
            if (w[k - 1] < 0.0 || w[k - 1] > 1.0) return 0.0;
            double v = 1.0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    double d = w[i] - w[j];
                    v *= d * d;
                }
            return v;
        },
        sum, sumsq);
    McEstimate e;
    e.samples = samples;
    double mean = sum / static_cast<double>(samples);
    double var = 0.0;
    if (samples > 1)
        var = std::max(0.0, (sumsq - samples * mean * mean) / static_cast<double>(samples - 1));
    e.mean = scale * mean;
    e.std_error = scale * std::sqrt(var / static_cast<double>(samples));
    return e;
}

// Exact short-interval shape factor (1-delta)^(k^2-1) * gamma_k(1/(1-delta)).
inline Rational script_P(int k, const Rational& delta, const Budget& budget = {}) {
    require(k >= 2, "the shape factor needs k >= 2");
    require(delta > 0 && delta < make_rational(BigInt(k - 1), BigInt(k)),
            "delta must lie in (0, 1 - 1/k)");
    Rational one_minus = Rational(1) - delta;
    Rational c = Rational(1) / one_minus;
    Rational g = gamma_at_rational(k, c, budget);
    return rational_pow(one_minus, static_cast<unsigned long>(k * k - 1)) * g;
}

namespace detail {

inline std::vector<long long> primes_up_to(long long cutoff) {
    std::vector<bool> sieve(cutoff + 1, true);
    std::vector<long long> out;
    for (long long i = 2; i <= cutoff; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (long long j = i * i; j <= cutoff; j += i) sieve[j] = false;
    }
    return out;
}

} // namespace detail

// Truncated Euler product for the arithmetic constant a_k. Each local factor
// is computed in two printed forms (an infinite series and a finite sum) and
// the two must agree to 1e-12 before the factor is accepted.
inline double a_k_constant(int k, long long prime_cutoff = 10000) {
    require(k >= 1, "a_k requires k >= 1");
    require(prime_cutoff >= 2, "prime cutoff must be at least 2");
    if (k == 1) return 1.0; // every local factor is exactly 1
    double product = 1.0;
    for (long long p : detail::primes_up_to(prime_cutoff)) {
        const double invp = 1.0 / static_cast<double>(p);
        // finite form: (1-1/p)^((k-1)^2) * sum_{j<k} C(k-1,j)^2 p^-j
        double s2 = 0.0, pj = 1.0;
        for (int j = 0; j < k; ++j) {
            double b = binomial(k - 1, j).get_d();
            s2 += b * b * pj;
            pj *= invp;
        }
        double f2 = std::pow(1.0 - invp, (k - 1) * (k - 1)) * s2;
        // series form: (1-1/p)^(k^2) * sum_j C(k+j-1,j)^2 p^-j
        double s1 = 0.0, term_b = 1.0, pw = 1.0;
        for (long long j = 0;; ++j) {
            if (j > 0) {
                term_b = term_b * static_cast<double>(k + j - 1) / static_cast<double>(j);
                pw *= invp;
            }
            double term = term_b * term_b * pw;
            s1 += term;
            if (term < 1e-18 * s1 && j >= k) break;
            require_budget(j < 100000, "local factor series failed to converge");
        }
        double f1 = std::pow(1.0 - invp, k * k) * s1;
        require_verified(std::abs(f1 - f2) <= 1e-12 * std::max(1.0, std::abs(f2)),
                         "local factor forms must agree to 1e-12");
        product *= f2;
    }
    return product;
}

struct SiPrediction {
    double a_k = 0.0;
    double shape = 0.0; // (1-delta)^(k^2-1) gamma_k(1/(1-delta))
    double H = 0.0;
    double log_power = 0.0;
    double value = 0.0;
};

// Heuristic short-interval variance scale a_k * P_k(delta) * H * (log X)^(k^2-1).
inline SiPrediction predict_variance_si(int k, double X, double delta,
                                        long long prime_cutoff = 10000,
                                        const Budget& budget = {}) {
    require(k >= 2, "prediction needs k >= 2");
    require(X > 1.0, "X must exceed 1");
    require(delta > 0.0 && delta < 1.0 - 1.0 / k, "delta must lie in (0, 1 - 1/k)");
    PiecewiseGamma g = gamma_full(k, budget);
    SiPrediction out;
    out.a_k = a_k_constant(k, prime_cutoff);
    const double c = 1.0 / (1.0 - delta);
    out.shape = std::pow(1.0 - delta, k * k - 1) * g.eval(c);
    out.H = std::pow(X, delta);
    out.log_power = std::pow(std::log(X), k * k - 1);
    out.value = out.a_k * out.shape * out.H * out.log_power;
    return out;
}

struct ApPrediction {
    double a_k = 0.0;
    double c = 0.0; // log X / log Q
    double gamma_c = 0.0;
    double value = 0.0;
};

// Heuristic progression variance scale (X/Q) * a_k * gamma_k(logX/logQ) * (log Q)^(k^2-1).
// The admissible window is Q^(1+eps) <= X <= Q^(k-eps); eps defaults to 0, so
// the boundary point X = Q (where gamma_k(1) applies) is accepted.
inline ApPrediction predict_variance_ap(int k, double X, double Q,
                                        long long prime_cutoff = 10000, double eps = 0.0,
                                        const Budget& budget = {}) {
    require(k >= 2, "prediction needs k >= 2");
    require(Q > 1.0, "Q must exceed 1");
    require(X > 1.0, "X must exceed 1");
    ApPrediction out;
    out.c = std::log(X) / std::log(Q);
    require(out.c >= 1.0 + eps - 1e-12 && out.c <= static_cast<double>(k) - eps + 1e-12,
            "X must lie between Q^(1+eps) and Q^(k-eps)");
    if (out.c < 1.0) out.c = 1.0;
    if (out.c > static_cast<double>(k)) out.c = static_cast<double>(k);
    PiecewiseGamma g = gamma_full(k, budget);
    out.a_k = a_k_constant(k, prime_cutoff);
    out.gamma_c = g.eval(out.c);
    out.value = (X / Q) * out.a_k * out.gamma_c * std::pow(std::log(Q), k * k - 1);
    return out;
}

// Normalized Fourier sum over the moment sequence:
// (1/N^(k^2)) * sum_m I_k(m;N) exp(-2 i alpha m / N).
inline std::complex<double> w_k_riemann(int k, double alpha, long long N,
                                        const Budget& budget = {}) {
    MomentTable table = moment_table(k, N, budget);
    std::complex<double> acc(0.0, 0.0);
    for (long long m = 0; m < static_cast<long long>(table.values.size()); ++m) {
        double w = mpz_get_d(table.values[m].get_mpz_t());
        double phase = -2.0 * alpha * static_cast<double>(m) / static_cast<double>(N);
        acc += w * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    double scale = std::pow(static_cast<double>(N), -static_cast<double>(k) * k);
    return acc * scale;
}

// Reference limit integral int_0^k exp(-2 i alpha u) gamma_k(u) du, from the
// exact pieces: for alpha = 0 an exact antiderivative sum, otherwise the
// closed form int p(u) e^{su} du = e^{su} sum_t (-1)^t p^(t)(u) / s^(t+1).
inline std::complex<double> gamma_fourier_reference(const PiecewiseGamma& g, double alpha) {
    if (alpha == 0.0) {
        Rational total(0);
        for (int r = 0; r < g.k; ++r) {
            const auto& coef = g.pieces[r].coeffs();
            Rational hi(0), lo(0);
            for (size_t i = 0; i < coef.size(); ++i) {
                Rational ai = coef[i] / Rational(static_cast<long>(i + 1));
                hi += ai * rational_pow(Rational(r + 1), static_cast<unsigned long>(i + 1));
                lo += ai * rational_pow(Rational(r), static_cast<unsigned long>(i + 1));
            }
            total += hi - lo;
        }
        return {total.get_d(), 0.0};
    }
    const std::complex<double> s(0.0, -2.0 * alpha);
    std::complex<double> total(0.0, 0.0);
    for (int r = 0; r < g.k; ++r) {
        std::vector<double> coef;
        for (const auto& c : g.pieces[r].coeffs()) coef.push_back(c.get_d());
        auto eval_f = [&](double u) {
            std::complex<double> acc(0.0, 0.0);
            std::vector<double> d = coef;
            std::complex<double> spow = s;
            double sign = 1.0;
            while (!d.empty()) {
                double val = 0.0;
                for (size_t i = d.size(); i-- > 0;) val = val * u + d[i];
                acc += sign * val / spow;
                spow *= s;
                sign = -sign;
                // differentiate
                for (size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] * (i + 1);
                if (!d.empty()) d.pop_back();
            }
            return std::exp(s * u) * acc;
        };
        total += eval_f(r + 1.0) - eval_f(r);
    }
    return total;
}

} // namespace secular
