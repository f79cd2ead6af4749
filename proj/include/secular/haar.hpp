#pragma once
// Haar-random unitary sampling and Monte-Carlo estimation of the secular
// moments. A sample is a complex-Gaussian matrix pushed through Householder
// QR with the triangular factor's diagonal phases folded into Q. Secular
// coefficients come from traces of powers via the power-sum recurrence, so no
// eigensolver is involved. Sampling is chunked into 256 fixed sub-streams of
// a counter RNG and merged in chunk order, making results byte-identical for
// any thread count.
#include <algorithm>
#include <array>
#include <complex>
#include <vector>
#include <thread>
#include <cmath>
#include <Eigen/Dense>
#include "rng.hpp"
#include "errors.hpp"

namespace secular {

struct HaarSample {
    int N = 0;
    std::vector<std::complex<double>> sc; // coefficients of det(I + xU), degree 0..N
};

inline HaarSample haar_sample_secular(int N, CounterRng& rng) {
    require(N >= 1, "Haar sampling requires N >= 1");
    Eigen::MatrixXcd g(N, N);
    const double inv_sqrt2 = 0.70710678118654752440;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            auto [a, b] = rng.next_gaussian_pair();
            g(i, j) = std::complex<double>(a * inv_sqrt2, b * inv_sqrt2);
        }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd u = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR();
    for (int j = 0; j < N; ++j) {
        std::complex<double> d = r(j, j);
        double ad = std::abs(d);
        std::complex<double> phase = (ad > 0.0) ? d / ad : std::complex<double>(1.0, 0.0);
        u.col(j) *= phase;
    }
    // power sums of eigenvalues, then the elementary-symmetric recurrence
    std::vector<std::complex<double>> p(N + 1);
    Eigen::MatrixXcd pw = u;
    for (int j = 1; j <= N; ++j) {
        p[j] = pw.trace();
        if (j < N) pw = pw * u;
    }
    HaarSample out;
    out.N = N;
    out.sc.assign(N + 1, std::complex<double>(0.0, 0.0));
    out.sc[0] = 1.0;
    for (int j = 1; j <= N; ++j) {
        std::complex<double> acc(0.0, 0.0);
        double sign = 1.0;
        for (int i = 1; i <= j; ++i) {
            acc += sign * p[i] * out.sc[j - i];
            sign = -sign;
        }
        out.sc[j] = acc / static_cast<double>(j);
    }
    return out;
}

namespace detail {

// |coefficient of x^m in (sum_j sc_j x^j)^k|^2
inline double secular_moment_statistic(const std::vector<std::complex<double>>& sc,
                                       int k, long long m) {
    std::vector<std::complex<double>> pw(1, std::complex<double>(1.0, 0.0));
    const size_t cap = static_cast<size_t>(m) + 1;
    for (int rep = 0; rep < k; ++rep) {
        std::vector<std::complex<double>> next(std::min(cap, pw.size() + sc.size() - 1),
                                               std::complex<double>(0.0, 0.0));
        for (size_t i = 0; i < pw.size(); ++i)
            for (size_t j = 0; j < sc.size() && i + j < next.size(); ++j)
                next[i + j] += pw[i] * sc[j];
        pw = std::move(next);
    }
    if (static_cast<size_t>(m) >= pw.size()) return 0.0;
    return std::norm(pw[m]);
}

// run `stat` over the fixed 256-chunk schedule; merge order is chunk order
template <typename Stat>
void run_chunked(long long samples, uint64_t seed, int threads, int N, Stat&& stat,
                 std::vector<std::array<double, 3>>& chunk_acc) {
    constexpr int kChunks = 256;
    chunk_acc.assign(kChunks, {0.0, 0.0, 0.0});
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    CounterRng root(seed);
    auto work = [&](int first, int last) {
        for (int c = first; c < last; ++c) {
            long long count = samples / kChunks + (c < samples % kChunks ? 1 : 0);
            if (count == 0) continue;
            CounterRng rng = root.split(static_cast<uint64_t>(c));
            for (long long i = 0; i < count; ++i) {
                HaarSample h = haar_sample_secular(N, rng);
                stat(h, chunk_acc[c]);
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
}

} // namespace detail

// Sample mean and standard error of the degree-m secular moment statistic.
inline McEstimate ik_monte_carlo(int k, long long m, int N, long long samples,
                                 uint64_t seed, int threads = 0) {
    require(k >= 1, "ik requires k >= 1");
    require(N >= 1, "ik Monte Carlo requires N >= 1");
    require(m >= 0 && m <= static_cast<long long>(k) * N, "m must satisfy 0 <= m <= k*N");
    require(samples >= 100, "Monte Carlo needs at least 100 samples");
    std::vector<std::array<double, 3>> acc;
    detail::run_chunked(samples, seed, threads, N,
                        [&](const HaarSample& h, std::array<double, 3>& a) {
                            double v = detail::secular_moment_statistic(h.sc, k, m);
                            a[0] += v;
                            a[1] += v * v;
                        },
                        acc);
    double sum = 0.0, sumsq = 0.0;
    for (const auto& a : acc) {
        sum += a[0];
        sumsq += a[1];
    }
    McEstimate e;
    e.samples = samples;
    e.mean = sum / static_cast<double>(samples);
    double var = 0.0;
    if (samples > 1)
        var = std::max(0.0, (sumsq - samples * e.mean * e.mean) / static_cast<double>(samples - 1));
    e.std_error = std::sqrt(var / static_cast<double>(samples));
    return e;
}

// Mean of prod_i Sc_{mu_i} * conj(prod_j Sc_{mutilde_j}) over Haar samples;
// converges to the contingency count of (mu, mutilde) for large enough N.
inline McComplexEstimate mc_composition_moment(const std::vector<long long>& mu,
                                               const std::vector<long long>& mutilde,
                                               int N, long long samples, uint64_t seed,
                                               int threads = 0) {
    require(!mu.empty() && !mutilde.empty(), "composition parts must be nonempty");
    long long s1 = 0, s2 = 0;
    for (long long v : mu) { require(v >= 0 && v <= N, "parts must lie in [0, N]"); s1 += v; }
    for (long long v : mutilde) { require(v >= 0 && v <= N, "parts must lie in [0, N]"); s2 += v; }
    require(s1 == s2, "compositions must have equal totals");
    require(samples >= 100, "Monte Carlo needs at least 100 samples");
    std::vector<std::array<double, 3>> acc;
    detail::run_chunked(samples, seed, threads, N,
                        [&](const HaarSample& h, std::array<double, 3>& a) {
                            std::complex<double> z(1.0, 0.0);
                            for (long long v : mu) z *= h.sc[v];
                            for (long long v : mutilde) z *= std::conj(h.sc[v]);
                            a[0] += z.real();
                            a[1] += z.imag();
                            a[2] += std::norm(z);
                        },
                        acc);
    double re = 0.0, im = 0.0, sq = 0.0;
    for (const auto& a : acc) {
        re += a[0];
        im += a[1];
        sq += a[2];
    }
    McComplexEstimate e;
    e.samples = samples;
    e.mean = std::complex<double>(re / samples, im / samples);
    double var = 0.0;
    if (samples > 1)
        var = std::max(0.0, (sq - samples * std::norm(e.mean)) / static_cast<double>(samples - 1));
    e.std_error = std::sqrt(var / static_cast<double>(samples));
    return e;
}

} // namespace secular
