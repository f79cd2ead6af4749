#pragma once
// Sieved divisor tables over F_q[t]. For every monic polynomial of degree up
// to n (encoded as a base-q integer) we store its smallest irreducible factor,
// found by marking multiples of each irreducible in (degree, code) order, and
// then fill d_k multiplicatively: strip the full power of the smallest factor
// and look the cofactor up in a lower-degree table. The mark pass enumerates
// cofactors digit by digit, updating the product's coefficient array and code
// incrementally, so each multiple costs O(deg P) ring operations.
#include <cstdint>
#include <vector>
#include "exact.hpp"
#include "fq.hpp"
#include "budget.hpp"

namespace secular {

struct DivisorTable {
    int q = 0;
    int n = 0;
    int k = 0;
    // sif[d][code]: smallest irreducible factor of the degree-d monic with
    // this code, packed as (deg << 27) | code; kNoFactor means irreducible
    std::vector<std::vector<uint32_t>> sif;
    // dk[d][code]: number of ordered monic k-factorizations
    std::vector<std::vector<uint64_t>> dk;

    static constexpr uint32_t kNoFactor = UINT32_MAX;

    bool is_irreducible(int deg, long long code) const {
        return deg >= 1 && sif[deg][static_cast<size_t>(code)] == kNoFactor;
    }

    uint64_t dk_of(int deg, long long code) const {
        require(deg >= 0 && deg <= n, "degree outside the table range");
        return dk[deg][static_cast<size_t>(code)];
    }

    uint64_t dk_value(const FqPoly& f) const {
        require(f.q == q, "polynomial field does not match the table");
        return dk_of(f.degree(), code_of_monic(f));
    }
};

namespace detail {

// Mark sif for all products P * g with g monic of degree dg, by depth-first
// enumeration of g's digits. prod holds the coefficient array of the current
// product and code its base-q encoding; adding P*t^pos advances one digit.
struct MultipleMarker {
    int q;
    const std::vector<int>& pc; // coefficients of P
    int dp;
    uint32_t packed;
    std::vector<int> prod;
    long long code;
    std::vector<long long> qpow;
    std::vector<uint32_t>* level; // sif table for degree dp + dg

    void add_p_shift(int pos) {
        for (int i = 0; i <= dp; ++i) {
            int idx = pos + i;
            int old = prod[idx];
            int now = old + pc[i];
            if (now >= q) now -= q;
            prod[idx] = now;
            code += static_cast<long long>(now - old) * qpow[idx];
        }
    }

    void walk(int pos) {
        if (pos < 0) {
            uint32_t& slot = (*level)[static_cast<size_t>(code)];
            if (slot == DivisorTable::kNoFactor) slot = packed;
            return;
        }
        for (int digit = 0; digit < q; ++digit) {
            walk(pos - 1);
            add_p_shift(pos); // q additions return the digit to its start
        }
    }
};

} // namespace detail

// Build the full divisor table for monic polynomials of degree <= n.
inline DivisorTable dk_table(int q, int n, int k, const Budget& budget = {}) {
    require(is_prime(static_cast<long long>(q)), "field order must be prime");
    require(n >= 0, "maximum degree must be nonnegative");
    require(k >= 1, "divisor order k must be at least 1");
    long long total = 1;
    for (int d = 1; d <= n; ++d) {
        require_budget(total <= budget.max_ff_codes / q, "monic sweep q^n exceeds budget");
        total *= q;
    }
    require_budget(total <= budget.max_ff_codes, "monic sweep q^n exceeds budget");
    // packed codes carry 27 bits; factors stored in sif have degree <= n/2
    {
        long long fit = 1;
        for (int d = 1; d <= n / 2; ++d) fit *= q;
        require_budget(fit < (1LL << 27), "factor codes exceed the packed width");
        require(n < 32, "degree exceeds the packed width");
    }

    DivisorTable t;
    t.q = q;
    t.n = n;
    t.k = k;
    t.sif.resize(n + 1);
    t.dk.resize(n + 1);
    std::vector<long long> block(n + 1);
    block[0] = 1;
    for (int d = 1; d <= n; ++d) block[d] = block[d - 1] * q;
    for (int d = 0; d <= n; ++d)
        t.sif[d].assign(static_cast<size_t>(block[d]), DivisorTable::kNoFactor);

    std::vector<long long> qpow(n + 2);
    qpow[0] = 1;
    for (int i = 1; i <= n + 1; ++i) qpow[i] = qpow[i - 1] * q;

    // sieve: every composite of degree d has a factor of degree <= d/2, so by
    // the time degree dp is scanned its unmarked entries are irreducible
    for (int dp = 1; 2 * dp <= n; ++dp) {
        for (long long pcode = 0; pcode < block[dp]; ++pcode) {
            if (t.sif[dp][static_cast<size_t>(pcode)] != DivisorTable::kNoFactor) continue;
            FqPoly p = monic_of_code(q, dp, pcode);
            uint32_t packed = (static_cast<uint32_t>(dp) << 27) | static_cast<uint32_t>(pcode);
            for (int dg = 1; dp + dg <= n; ++dg) {
                detail::MultipleMarker m{q, p.c, dp, packed, {}, 0, qpow, &t.sif[dp + dg]};
                m.prod.assign(dp + dg + 1, 0);
                // start from g = t^dg
                for (int i = 0; i <= dp; ++i) m.prod[dg + i] = p.c[i];
                m.code = 0;
                for (int i = 0; i < dp + dg; ++i)
                    m.code += static_cast<long long>(m.prod[i]) * qpow[i];
                m.walk(dg - 1);
            }
        }
    }

    // multiplicative fill: strip the whole power of the smallest factor. All
    // division is done on reused digit buffers; the divisor is monic, so the
    // synthetic division needs no inverses.
    t.dk[0].assign(1, 1);
    std::vector<uint64_t> local_factor(n + 2); // C(e+k-1, k-1) for e = 0..n+1
    for (int e = 0; e <= n + 1; ++e)
        local_factor[e] = mpz_get_ui(binomial(e + k - 1, k - 1).get_mpz_t());
    std::vector<int> fd(n + 1), pd(n + 1), wk(n + 1);
    for (int d = 1; d <= n; ++d) {
        t.dk[d].assign(static_cast<size_t>(block[d]), 0);
        uint64_t* out = t.dk[d].data();
        const uint32_t* marks = t.sif[d].data();
        for (long long code = 0; code < block[d]; ++code) {
            uint32_t mark = marks[code];
            if (mark == DivisorTable::kNoFactor) {
                out[code] = static_cast<uint64_t>(k);
                continue;
            }
            const int dp = static_cast<int>(mark >> 27);
            long long pcode = static_cast<long long>(mark & ((1u << 27) - 1));
            long long pc = pcode;
            for (int i = 0; i < dp; ++i) {
                pd[i] = static_cast<int>(pc % q);
                pc /= q;
            }
            long long fc = code;
            for (int i = 0; i < d; ++i) {
                fd[i] = static_cast<int>(fc % q);
                fc /= q;
            }
            fd[d] = 1;
            // divide out p as often as it goes; trial division runs on a
            // scratch copy so a failed attempt leaves the cofactor intact
            int deg = d, e = 0;
            while (deg >= dp) {
                for (int i = 0; i <= deg; ++i) wk[i] = fd[i];
                for (int i = deg; i >= dp; --i) {
                    int c = wk[i];
                    if (c == 0) continue;
                    for (int j = 0; j < dp; ++j) {
                        int idx = i - dp + j;
                        wk[idx] = (wk[idx] - c * pd[j]) % q;
                    }
                }
                bool divisible = true;
                for (int j = 0; j < dp; ++j)
                    if (wk[j] != 0) {
                        divisible = false;
                        break;
                    }
                if (!divisible) break;
                for (int i = dp; i <= deg; ++i) {
                    int v = wk[i] % q;
                    fd[i - dp] = v < 0 ? v + q : v;
                }
                deg -= dp;
                ++e;
            }
            long long cof_code = 0;
            for (int i = deg - 1; i >= 0; --i) cof_code = cof_code * q + fd[i];
            out[code] = local_factor[e] * t.dk[deg][static_cast<size_t>(cof_code)];
        }
    }

    // degree-n mass identity: sum of d_k over monics of degree n
    if (n >= 1) {
        BigInt sum(0);
        unsigned long long acc = 0;
        for (uint64_t v : t.dk[n]) {
            unsigned long long was = acc;
            acc += v;
            if (acc < was) { // spill to exact on wraparound
                sum += BigInt(static_cast<unsigned long>(was));
                acc = v;
            }
        }
        sum += BigInt(static_cast<unsigned long>(acc));
        BigInt expect = BigInt(static_cast<long>(block[n])) * binomial(n + k - 1, k - 1);
        require_verified(sum == expect, "degree-n divisor mass must match its closed form");
    }
    return t;
}

} // namespace secular
