#pragma once
// Exact computation of the secular-coefficient moments I_k(m;N) by several
// independent routes:
//   * binomial closed forms on the two outer ranges of m,
//   * a column-by-column dynamic program over the monotone-array lattice,
//   * exhaustive enumeration of the same lattice (small sizes only),
//   * an anti-diagonal split into pairs of monotone-triangle counts,
//   * expansion of the k = 2, 3 generating functions,
// plus the contingency-table counts that the m <= N identity rests on.
#include <vector>
#include <optional>
#include <map>
#include <string>
#include <cstdint>
#include "exact.hpp"
#include "poly.hpp"
#include "budget.hpp"

namespace secular {

struct MomentTable {
    int k = 0;
    long long N = 0;
    std::vector<BigInt> values; // index m = 0..kN
};

// Binomial closed forms, valid on m <= N and m >= (k-1)N only; the middle
// range has no single binomial and yields nullopt.
inline std::optional<BigInt> ik_closed_form(int k, long long m, long long N) {
    require(k >= 1, "ik requires k >= 1");
    require(N >= 0, "ik requires N >= 0");
    require(m >= 0 && m <= static_cast<long long>(k) * N, "m must satisfy 0 <= m <= k*N");
    const long long d = static_cast<long long>(k) * k - 1;
    if (m <= N) return binomial(m + d, d);
    if (m >= static_cast<long long>(k - 1) * N) return binomial(static_cast<long long>(k) * N - m + d, d);
    return std::nullopt;
}

// Number of nonnegative integer matrices with the given row and column sums.
inline BigInt contingency_count(const std::vector<long long>& row_sums,
                                const std::vector<long long>& col_sums) {
    long long rt = 0, ct = 0;
    for (long long v : row_sums) { require(v >= 0, "row sums must be nonnegative"); rt += v; }
    for (long long v : col_sums) { require(v >= 0, "column sums must be nonnegative"); ct += v; }
    require(rt == ct, "row and column totals must match");

    // count is invariant under column permutation, so memoize on sorted columns
    std::map<std::pair<size_t, std::vector<long long>>, BigInt> memo;

    struct Rec {
        const std::vector<long long>& rows;
        std::map<std::pair<size_t, std::vector<long long>>, BigInt>& memo;
        BigInt count(size_t i, std::vector<long long> cols) {
            std::sort(cols.begin(), cols.end(), std::greater<long long>());
            if (i == rows.size()) {
                for (long long v : cols)
                    if (v != 0) return BigInt(0);
                return BigInt(1);
            }
            auto key = std::make_pair(i, cols);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            BigInt total = distribute(i, cols, 0, rows[i]);
            memo.emplace(std::move(key), total);
            return total;
        }
        // place `rem` units of row i into cols[j..]
        BigInt distribute(size_t i, std::vector<long long>& cols, size_t j, long long rem) {
            if (j == cols.size()) return rem == 0 ? count(i + 1, cols) : BigInt(0);
            BigInt total(0);
            long long hi = std::min(rem, cols[j]);
            for (long long v = 0; v <= hi; ++v) {
                cols[j] -= v;
                total += distribute(i, cols, j + 1, rem - v);
                cols[j] += v;
            }
            return total;
        }
    } rec{row_sums, memo};
    return rec.count(0, col_sums);
}

// Exhaustive count of k x k arrays with entries in [0,N], rows weakly
// increasing left to right, columns weakly decreasing top to bottom, and
// anti-diagonal sum kN - m. Guarded: cost grows like (N+1)^(k^2).
inline BigInt ik_bruteforce(int k, long long m, long long N) {
    require(k >= 1, "ik requires k >= 1");
    require(N >= 0, "ik requires N >= 0");
    require(m >= 0 && m <= static_cast<long long>(k) * N, "m must satisfy 0 <= m <= k*N");
    require_budget(k <= 3 && N <= 6, "brute force limited to k <= 3, N <= 6");

    const long long target = static_cast<long long>(k) * N - m;
    std::vector<std::vector<long long>> x(k, std::vector<long long>(k, 0));
    BigInt count(0);

    struct Rec {
        int k;
        long long N, target;
        std::vector<std::vector<long long>>& x;
        BigInt& count;
        void fill(int i, int j, long long diag_sum) {
            if (i == k) {
                if (diag_sum == target) count += 1;
                return;
            }
            int ni = (j == k - 1) ? i + 1 : i;
            int nj = (j == k - 1) ? 0 : j + 1;
            long long lo = (j > 0) ? x[i][j - 1] : 0;     // rows weakly increase rightward
            long long hi = (i > 0) ? x[i - 1][j] : N;     // columns weakly decrease downward
            bool on_diag = (j == k - 1 - i);
            for (long long v = lo; v <= hi; ++v) {
                x[i][j] = v;
                fill(ni, nj, diag_sum + (on_diag ? v : 0));
            }
            x[i][j] = lo; // restore a consistent bound for siblings
        }
    } rec{k, N, target, x, count};
    rec.fill(0, 0, 0);
    return count;
}

// Number of triangular monotone patterns with the given weakly decreasing top
// row (product formula over index pairs).
inline BigInt monotone_triangle_count(const std::vector<long long>& top) {
    const size_t k = top.size();
    require(k >= 1, "pattern count needs a nonempty top row");
    for (size_t i = 0; i + 1 < k; ++i)
        require(top[i] >= top[i + 1], "top row must be weakly decreasing");
    BigInt num(1), den(1);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            num *= BigInt(static_cast<long>(top[i] - top[j]) + static_cast<long>(j - i));
            den *= BigInt(static_cast<long>(j - i));
        }
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    require_verified(r == 0, "pattern-count product must divide exactly");
    return q;
}

namespace detail {

// enumerate weakly decreasing k-tuples a with 0 <= a_i <= cap and sum = s
template <typename F>
void for_each_bounded_partition(int k, long long s, long long cap, F&& emit) {
    if (s < 0 || s > static_cast<long long>(k) * cap) return;
    std::vector<long long> a(k, 0);
    struct Rec {
        int k;
        std::vector<long long>& a;
        F& emit;
        void go(int i, long long rem, long long hi) {
            if (i == k - 1) {
                a[i] = rem; // bounds below guarantee rem <= hi
                emit(a);
                return;
            }
            long long parts = k - i;
            long long lo = (rem + parts - 1) / parts;
            long long top = std::min(hi, rem);
            for (long long v = top; v >= lo; --v) {
                a[i] = v;
                go(i + 1, rem - v, v);
            }
        }
    } rec{k, a, emit};
    rec.go(0, s, cap);
}

inline uint64_t superfactorial_pairs(int k) {
    // product of (j - i) over 0 <= i < j < k
    uint64_t den = 1;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) den *= static_cast<uint64_t>(j - i);
    return den;
}

} // namespace detail

// I_k(m;N) by splitting each monotone array along its anti-diagonal a
// (weakly decreasing, sum kN - m): the two halves are independent monotone
// triangles with top rows a and reverse(N - a), so
//   I_k(m;N) = sum_a count(a) * count(reverse(N - a)).
// Fast path in 64/128-bit arithmetic with overflow checks, exact fallback.
inline BigInt ik_antidiagonal_split(int k, long long m, long long N) {
    require(k >= 1, "ik requires k >= 1");
    require(N >= 0, "ik requires N >= 0");
    if (m < 0 || m > static_cast<long long>(k) * N) return BigInt(0);
    const long long s = static_cast<long long>(k) * N - m;

    // u64-safe iff the largest pattern-count numerator product fits
    bool fast = true;
    {
        unsigned __int128 bound = 1;
        for (int i = 0; i < k * (k - 1) / 2; ++i) {
            bound *= static_cast<unsigned __int128>(N + k - 1 > 1 ? N + k - 1 : 1);
            if (bound > ~uint64_t(0)) { fast = false; break; }
        }
    }

    if (fast) {
        const uint64_t den = detail::superfactorial_pairs(k);
        unsigned __int128 acc = 0;
        bool overflow = false;
        std::vector<long long> b(k);
        detail::for_each_bounded_partition(k, s, N, [&](const std::vector<long long>& a) {
            if (overflow) return;
            for (int i = 0; i < k; ++i) b[i] = N - a[k - 1 - i];
            uint64_t d1 = 1, d2 = 1;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    d1 *= static_cast<uint64_t>(a[i] - a[j] + (j - i));
                    d2 *= static_cast<uint64_t>(b[i] - b[j] + (j - i));
                }
            unsigned __int128 term =
                (static_cast<unsigned __int128>(d1 / den)) * (d2 / den);
            acc += term;
            if (acc < term) overflow = true;
        });
        if (!overflow) return from_u128(acc);
    }

    BigInt acc(0);
    std::vector<long long> b(k);
    detail::for_each_bounded_partition(k, s, N, [&](const std::vector<long long>& a) {
        for (int i = 0; i < k; ++i) b[i] = N - a[k - 1 - i];
        acc += monotone_triangle_count(a) * monotone_triangle_count(b);
    });
    return acc;
}

namespace detail {

// Column DP over the monotone-array lattice. States are weakly decreasing
// k-tuples in [0,N]^k, densely ranked by
//   rank(x) = sum_t C(x[t] + k-1-t, k-t),
// which is exactly lexicographic order. One column transition (old column
// elementwise <= new column, both monotone) equals k in-place prefix-sum
// passes, one per coordinate: raising coordinates in index order keeps every
// intermediate tuple monotone, and each (old,new) pair corresponds to exactly
// one raising path. Verified against brute force in the test suite.
struct LatticeDp {
    int k;
    long long N;
    size_t states, slots;
    std::vector<std::vector<uint64_t>> binom; // binom[j][a] = C(a, j), j <= k

    LatticeDp(int k_, long long N_, const Budget& budget) : k(k_), N(N_) {
        BigInt sc = binomial(N + k, k);
        require_budget(sc <= BigInt(static_cast<long>(budget.max_dp_states)), "lattice DP state count exceeds budget");
        states = static_cast<size_t>(sc.get_ui());
        slots = static_cast<size_t>(k) * N + 1;
        require_budget(static_cast<long long>(states) * static_cast<long long>(slots)
                           <= budget.max_dp_cells,
                       "lattice DP cell count exceeds budget");
        binom.assign(k + 1, std::vector<uint64_t>(N + k + 1, 0));
        for (long long a = 0; a <= N + k; ++a) {
            binom[0][a] = 1;
            for (int j = 1; j <= k; ++j)
                binom[j][a] = (a == 0) ? 0 : binom[j][a - 1] + binom[j - 1][a - 1];
        }
    }

    // advance x to its lexicographic successor among monotone tuples; false at end
    bool next_state(std::vector<long long>& x) const {
        for (int t = k - 1; t >= 0; --t) {
            long long cap = (t == 0) ? N : x[t - 1];
            if (x[t] + 1 <= cap) {
                ++x[t];
                for (int u = t + 1; u < k; ++u) x[u] = 0;
                return true;
            }
        }
        return false;
    }

    // rank change when coordinate t drops by one
    size_t decrement_delta(long long xt, int t) const {
        return binom[k - 1 - t][xt - 1 + (k - 1 - t)];
    }

    // distribution over anti-diagonal sums s = kN - m
    std::vector<BigInt> distribution() const {
        std::vector<BigInt> cells(states * slots);
        // column 1: state = first column, anti-diagonal entry is its bottom coordinate
        {
            std::vector<long long> x(k, 0);
            size_t r = 0;
            do {
                cells[r * slots + x[k - 1]] = 1;
                ++r;
            } while (next_state(x));
        }
        for (int col = 2; col <= k; ++col) {
            for (int t = 0; t < k; ++t) {
                std::vector<long long> x(k, 0);
                size_t r = 0;
                do {
                    long long floor_t = (t + 1 < k) ? x[t + 1] : 0;
                    if (x[t] > floor_t) {
                        size_t r2 = r - decrement_delta(x[t], t);
                        BigInt* dst = &cells[r * slots];
                        const BigInt* src = &cells[r2 * slots];
                        for (size_t s = 0; s < slots; ++s) dst[s] += src[s];
                    }
                    ++r;
                } while (next_state(x));
            }
            // add this column's anti-diagonal entry (row k+1-col) to the sum
            std::vector<long long> x(k, 0);
            size_t r = 0;
            do {
                long long d = x[k - col];
                if (d > 0) {
                    BigInt* row = &cells[r * slots];
                    for (size_t s = slots; s-- > 0;) {
                        if (s >= static_cast<size_t>(d))
                            row[s] = std::move(row[s - d]);
                        else
                            row[s] = 0;
                    }
                }
                ++r;
            } while (next_state(x));
        }
        std::vector<BigInt> dist(slots);
        for (size_t r = 0; r < states; ++r)
            for (size_t s = 0; s < slots; ++s) dist[s] += cells[r * slots + s];
        return dist;
    }
};

} // namespace detail

// Full I_k(.;N) sequence from the lattice DP alone (no cross-checks).
inline std::vector<BigInt> ik_lattice_distribution(int k, long long N,
                                                   const Budget& budget = {}) {
    require(k >= 1, "ik requires k >= 1");
    require(N >= 0, "ik requires N >= 0");
    detail::LatticeDp dp(k, N, budget);
    std::vector<BigInt> dist = dp.distribution();
    // dist is indexed by anti-diagonal sum s = kN - m; reindex by m
    std::vector<BigInt> values(dist.rbegin(), dist.rend());
    return values;
}

inline BigInt ik_lattice_dp(int k, long long m, long long N, const Budget& budget = {}) {
    require(k >= 1, "ik requires k >= 1");
    require(N >= 0, "ik requires N >= 0");
    require(m >= 0 && m <= static_cast<long long>(k) * N, "m must satisfy 0 <= m <= k*N");
    return ik_lattice_distribution(k, N, budget)[m];
}

// Number of plane partitions in an a x b x c box (exact product formula);
// equals the sum of the full moment sequence when a = b = k, c = N.
inline BigInt macmahon_box(int a, int b, long long c) {
    require(a >= 1 && b >= 1 && c >= 0, "box dimensions must be positive");
    Rational prod(1);
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            for (long long l = 1; l <= c; ++l)
                prod *= make_rational(BigInt(static_cast<long>(i + j + l - 1)), BigInt(static_cast<long>(i + j + l - 2)));
    require_verified(prod.get_den() == 1, "box product must be an integer");
    return prod.get_num();
}

// Middle-range closed form for k = 3: a single degree-8 polynomial in m that
// agrees with the binomial forms at m = N and m = 2N and covers N < m < 2N.
inline BigInt i3_middle_closed_form(long long N, long long m) {
    require(N >= 0 && m >= 0 && m <= 3 * N, "m must satisfy 0 <= m <= 3N");
    const Rational n(static_cast<long>(N));
    auto sq = [](const Rational& v) { return v * v; };
    Rational c_p3 = Rational(-1, 4) * sq(n + 3) * sq(n + 4);
    Rational c_p4 = sq(n + 3) * (n * n + 7 * n + 10);
    Rational c_p5 = Rational(-3, 2) * (((n + 12) * n + 51) * n * n + 90 * n + 56);
    Rational c_p6 = sq(n + 3) * (n * n + 5 * n + 4);
    Rational c_p7 = Rational(-1, 4) * sq(n + 3) * sq(n + 2);
    Rational val = Rational(binomial_or_zero(m + 8, 8))
                 + c_p3 * Rational(binomial_or_zero(m - N + 3, 8))
                 + c_p4 * Rational(binomial_or_zero(m - N + 4, 8))
                 + c_p5 * Rational(binomial_or_zero(m - N + 5, 8))
                 + c_p6 * Rational(binomial_or_zero(m - N + 6, 8))
                 + c_p7 * Rational(binomial_or_zero(m - N + 7, 8));
    val.canonicalize();
    require_verified(val.get_den() == 1, "middle-range value must be an integer");
    return val.get_num();
}

// Best exact single-value route: binomial forms on the flanks, the k = 3
// middle polynomial where it applies, anti-diagonal split otherwise.
inline BigInt ik_value(int k, long long m, long long N, std::string* branch = nullptr) {
    require(k >= 1, "ik requires k >= 1");
    require(N >= 0, "ik requires N >= 0");
    if (m < 0 || m > static_cast<long long>(k) * N) {
        if (branch) *branch = "zero-outside-support";
        return BigInt(0);
    }
    if (auto cf = ik_closed_form(k, m, N)) {
        if (branch) *branch = (m <= N) ? "binomial-low" : "binomial-high";
        return *cf;
    }
    if (k == 3) {
        if (branch) *branch = "middle-closed-form";
        return i3_middle_closed_form(N, m);
    }
    if (branch) *branch = "antidiagonal-split";
    return ik_antidiagonal_split(k, m, N);
}

// The full moment sequence with every invariant cross-checked: DP values
// against both binomial flanks, palindromy, positivity, and the box total.
inline MomentTable moment_table(int k, long long N, const Budget& budget = {}) {
    require(k >= 1, "moment table requires k >= 1");
    require(N >= 1, "moment table requires N >= 1");
    require_budget(static_cast<long long>(k) * N <= budget.max_kn,
                   "moment table k*N exceeds budget");
    std::vector<BigInt> values = ik_lattice_distribution(k, N, budget);
    const long long kn = static_cast<long long>(k) * N;
    BigInt total(0);
    for (long long m = 0; m <= kn; ++m) {
        require_verified(values[m] > 0, "moment values must be strictly positive");
        require_verified(values[m] == values[kn - m], "moment sequence must be palindromic");
        if (auto cf = ik_closed_form(k, m, N))
            require_verified(values[m] == *cf, "DP must match the binomial closed form");
        total += values[m];
    }
    require_verified(total == macmahon_box(k, k, N), "moment total must match the box count");
    return MomentTable{k, N, std::move(values)};
}

// Expanded generating function for k = 2, 3: numerator polynomial divided by
// (1-x)^(k^2), whose x^m coefficient is I_k(m;N). Exponents can collide for
// small N, so coefficients are accumulated, not assigned.
inline DensePoly<Rational> pk_closed_form(int k, long long N) {
    require(k == 2 || k == 3, "generating-function route covers k in {2, 3}");
    require(N >= 1, "generating function requires N >= 1");
    const Rational n(static_cast<long>(N));
    DensePoly<Rational> num;
    if (k == 2) {
        Rational a = (n + 2) * (n + 2);
        num.add_at(0, Rational(1));
        num.add_at(2 * N + 4, Rational(1));
        num.add_at(N + 1, -a);
        num.add_at(N + 2, 2 * (n * n + 4 * n + 3));
        num.add_at(N + 3, -a);
    } else {
        auto sq = [](const Rational& v) { return v * v; };
        Rational c1 = sq(n + 3) * (n * n + 5 * n + 4);
        Rational c2 = Rational(1, 4) * sq(n + 3) * sq(n + 2);
        Rational c3 = sq(n + 3) * (n * n + 7 * n + 10);
        Rational c4 = Rational(1, 4) * sq(n + 3) * sq(n + 4);
        Rational c5 = Rational(3, 2) * (((n + 12) * n + 51) * n * n + 90 * n + 56);
        num.add_at(0, Rational(1));
        num.add_at(3 * N + 9, Rational(-1));
        num.add_at(N + 2, c1);
        num.add_at(2 * N + 7, -c1);
        num.add_at(2 * N + 8, c2);
        num.add_at(N + 1, -c2);
        num.add_at(N + 4, c3);
        num.add_at(2 * N + 5, -c3);
        num.add_at(2 * N + 4, c4);
        num.add_at(N + 5, -c4);
        num.add_at(2 * N + 6, c5);
        num.add_at(N + 3, -c5);
    }
    const long long r = static_cast<long long>(k) * k;
    const long long deg = static_cast<long long>(k) * N;
    // multiply by the series (1-x)^(-r); verify the tail beyond degree kN vanishes
    std::vector<Rational> out(deg + 1, Rational(0));
    for (long long i = 0; i <= deg + r; ++i) {
        Rational coeff(0);
        for (long long j = 0; j <= i && j <= num.degree(); ++j)
            coeff += num.get(j) * Rational(binomial(i - j + r - 1, r - 1));
        if (i <= deg) {
            coeff.canonicalize();
            require_verified(coeff.get_den() == 1, "series coefficients must be integers");
            out[i] = coeff;
        } else {
            require_verified(coeff == 0, "series must terminate at degree kN");
        }
    }
    return DensePoly<Rational>(std::move(out));
}

} // namespace secular
