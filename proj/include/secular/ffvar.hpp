#pragma once
// Exact divisor-sum variances over F_q[t]. Short intervals are contiguous
// code blocks of the degree-n table, so the sweep is a linear scan; progression
// variances bucket the same table by residue class mod Q, with the residue
// updated incrementally as the code odometer steps. Both come with the
// matrix-integral prediction and the variance/prediction ratio.
#include <string>
#include <vector>
#include "exact.hpp"
#include "fq.hpp"
#include "dk_sieve.hpp"
#include "moments.hpp"
#include "budget.hpp"

namespace secular {

struct VarianceReport {
    int q = 0;
    int n = 0;
    int h = -1; // short-interval radius; -1 for progression reports
    int k = 0;
    std::string modulus;    // progression modulus, empty for short intervals
    long long support = 0;  // H = q^(h+1), or Phi(Q)
    Rational variance;      // exact
    Rational prediction;    // H * I_k(n; n-h-2), or (q^n/|Q|) * I_k(n; degQ-1)
    bool both_zero = false; // variance and prediction are exactly zero
    double ratio = 0.0;     // variance / prediction, when prediction != 0
};

// Sum of d_k over the interval of all monic f of degree n agreeing with A
// above degree h. Intervals are aligned code blocks of length q^(h+1).
inline BigInt short_interval_sum(const DivisorTable& table, const FqPoly& A, int h) {
    require(A.q == table.q, "polynomial field does not match the table");
    require(A.degree() == table.n, "interval center must have the table degree");
    require(A.is_monic(), "interval center must be monic");
    require(h >= 0 && h <= table.n - 2, "interval radius must satisfy 0 <= h <= n-2");
    long long H = 1;
    for (int i = 0; i <= h; ++i) H *= table.q;
    long long base = code_of_monic(A) / H * H;
    unsigned long long acc = 0;
    const uint64_t* dk = table.dk[table.n].data();
    for (long long c = base; c < base + H; ++c) acc += dk[c];
    return BigInt(static_cast<unsigned long>(acc));
}

// Exact variance of the short-interval sums about their mean, together with
// the matrix-integral prediction H * I_k(n; n-h-2).
inline VarianceReport short_interval_variance(int q, int n, int h, int k,
                                              const Budget& budget = {}) {
    require(n >= 2, "variance needs n >= 2");
    require(h >= 0 && h <= n - 2, "interval radius must satisfy 0 <= h <= n-2");
    DivisorTable table = dk_table(q, n, k, budget);

    long long H = 1;
    for (int i = 0; i <= h; ++i) H *= q;
    long long qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    const long long blocks = qn / H;
    const BigInt mu = BigInt(static_cast<long>(H)) * binomial(n + k - 1, k - 1);

    BigInt devsq(0);
    BigInt total(0);
    const uint64_t* dk = table.dk[n].data();
    for (long long b = 0; b < blocks; ++b) {
        unsigned long long s = 0;
        for (long long c = b * H; c < (b + 1) * H; ++c) s += dk[c];
        BigInt sb(static_cast<unsigned long>(s));
        total += sb;
        BigInt dev = sb - mu;
        devsq += dev * dev;
    }
    require_verified(total == BigInt(static_cast<long>(qn)) * binomial(n + k - 1, k - 1),
                     "interval sums must add up to the degree-n divisor mass");

    VarianceReport rep;
    rep.q = q;
    rep.n = n;
    rep.h = h;
    rep.k = k;
    rep.support = H;
    rep.variance = make_rational(devsq, BigInt(static_cast<long>(blocks)));
    rep.prediction = Rational(BigInt(static_cast<long>(H)) * ik_value(k, n, n - h - 2));
    if (rep.prediction == 0) {
        rep.both_zero = (rep.variance == 0);
        rep.ratio = 0.0;
    } else {
        rep.ratio = Rational(rep.variance / rep.prediction).get_d();
    }
    return rep;
}

// Exact variance over residues A coprime to Q of the sums S(A) of d_k over
// monic degree-n f with f = A mod Q, about their mean, with the prediction
// (q^n / |Q|) * I_k(n; deg Q - 1).
inline VarianceReport ap_variance_direct(int q, const FqPoly& Q, int n, int k,
                                         const Budget& budget = {}) {
    require(Q.q == q, "modulus field does not match q");
    require(Q.is_monic(), "modulus must be monic");
    require(Q.degree() >= 2, "modulus degree must be at least 2");
    require(fq_is_squarefree(Q), "modulus must be squarefree");
    require(n >= 1, "variance needs n >= 1");
    const int dq = Q.degree();
    long long block = 1;
    for (int i = 0; i < dq; ++i) {
        block *= q;
        require_budget(block <= budget.max_residue_tables, "residue table exceeds budget");
    }
    DivisorTable table = dk_table(q, n, k, budget);
    long long qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;

    // residue of t^j mod Q for the odometer deltas: sigma_j = sum_{i<=j} t^i
    std::vector<std::vector<int>> sigma(n);
    {
        FqPoly run(q, {});
        for (int j = 0; j < n; ++j) {
            run = fq_mod(fq_add(run, fq_monomial(q, j)), Q);
            sigma[j].assign(dq, 0);
            for (int i = 0; i < dq; ++i) sigma[j][i] = run.coeff(i);
        }
    }

    std::vector<unsigned long long> bucket(static_cast<size_t>(block), 0);
    std::vector<int> res(dq, 0), odo(n, 0);
    {
        FqPoly r0 = fq_mod(fq_monomial(q, n), Q);
        for (int i = 0; i < dq; ++i) res[i] = r0.coeff(i);
    }
    const uint64_t* dk = table.dk[n].data();
    for (long long code = 0;; ++code) {
        long long rescode = 0;
        for (int i = dq - 1; i >= 0; --i) rescode = rescode * q + res[i];
        bucket[static_cast<size_t>(rescode)] += dk[code];
        if (code + 1 == qn) break;
        int j = 0;
        while (odo[j] == q - 1) {
            odo[j] = 0;
            ++j;
        }
        ++odo[j];
        const std::vector<int>& s = sigma[j];
        for (int i = 0; i < dq; ++i) {
            res[i] += s[i];
            if (res[i] >= q) res[i] -= q;
        }
    }

    // coprime residue classes and the exact mean-square deviation
    long long phi = 0;
    BigInt total(0);
    std::vector<char> coprime(static_cast<size_t>(block), 0);
    for (long long r = 0; r < block; ++r) {
        FqPoly rp = residue_of_code(q, dq, r);
        if (rp.is_zero()) continue;
        if (fq_gcd(rp, Q).degree() == 0) {
            coprime[static_cast<size_t>(r)] = 1;
            ++phi;
            total += BigInt(static_cast<unsigned long>(bucket[static_cast<size_t>(r)]));
        }
    }
    BigInt devsq(0);
    BigInt phiz(static_cast<long>(phi));
    for (long long r = 0; r < block; ++r) {
        if (!coprime[static_cast<size_t>(r)]) continue;
        BigInt dev = phiz * BigInt(static_cast<unsigned long>(bucket[static_cast<size_t>(r)])) - total;
        devsq += dev * dev;
    }

    VarianceReport rep;
    rep.q = q;
    rep.n = n;
    rep.k = k;
    rep.modulus = fq_to_string(Q);
    rep.support = phi;
    rep.variance = make_rational(devsq, phiz * phiz * phiz);
    rep.prediction = make_rational(BigInt(static_cast<long>(qn)) * ik_value(k, n, dq - 1),
                                   BigInt(static_cast<long>(block)));
    if (rep.prediction == 0) {
        rep.both_zero = (rep.variance == 0);
        rep.ratio = 0.0;
    } else {
        rep.ratio = Rational(rep.variance / rep.prediction).get_d();
    }
    return rep;
}

} // namespace secular
