// F_q[t] arithmetic, the divisor-count sieve, both variance theorems, and the
// Dirichlet-character route.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "secular/fq.hpp"
#include "secular/dk_sieve.hpp"
#include "secular/ffvar.hpp"
#include "secular/chars.hpp"
#include "secular/rng.hpp"

using namespace secular;

TEST_CASE("field polynomials normalize on construction") {
    FqPoly f(3, {4, 7, 9}); // reduces to 1 + t, top coefficient vanishes
    CHECK(f.degree() == 1);
    CHECK(f.coeff(0) == 1);
    CHECK(f.coeff(1) == 1);
    CHECK(FqPoly(3, {-1}).coeff(0) == 2);
    CHECK(FqPoly(5, {0, 0}).is_zero());
    CHECK(FqPoly(5, {0, 0}).degree() == -1);
    CHECK_THROWS_AS(FqPoly(4, {1}), precondition_error); // 4 is not prime
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
    CHECK(inv_mod(2, 5) == 3);
    CHECK_THROWS_AS(inv_mod(0, 5), precondition_error);
}

TEST_CASE("ring operations") {
    FqPoly a(3, {1, 1});  // 1 + t
    FqPoly b(3, {2, 1});  // 2 + t
    FqPoly prod = fq_mul(a, b);
    CHECK(prod == FqPoly(3, {2, 0, 1})); // t^2 + 2
    CHECK(fq_add(a, b) == FqPoly(3, {0, 2}));
    CHECK(fq_sub(a, b) == FqPoly(3, {2}));
    CHECK(fq_eval(prod, 1) == 0); // t = 1 is a root of t^2 + 2 over F_3
    CHECK(fq_derivative(FqPoly(3, {0, 0, 0, 1})) == FqPoly(3, {})); // (t^3)' = 0 over F_3
}

TEST_CASE("division with remainder") {
    CounterRng rng(404);
    for (int trial = 0; trial < 50; ++trial) {
        int q = (trial % 2 == 0) ? 3 : 5;
        int df = 1 + static_cast<int>(rng.next_u64() % 5);
        int dg = 1 + static_cast<int>(rng.next_u64() % df);
        FqPoly f = monic_of_code(q, df, static_cast<long long>(rng.next_u64() % pow_ll(q, df)));
        FqPoly g = monic_of_code(q, dg, static_cast<long long>(rng.next_u64() % pow_ll(q, dg)));
        auto [quot, rem] = fq_divmod(f, g);
        CHECK(fq_add(fq_mul(quot, g), rem) == f);
        CHECK(rem.degree() < g.degree());
    }
    CHECK_THROWS_AS(fq_divmod(FqPoly(3, {1}), FqPoly(3, {})), precondition_error);
}

TEST_CASE("gcd, squarefree test, factorization") {
    FqPoly t1(3, {1, 1}), t2(3, {2, 1}), t0(3, {0, 1});
    CHECK(fq_gcd(fq_mul(t1, t2), fq_mul(t1, t0)) == t1);
    CHECK(fq_gcd(t1, t2).degree() == 0);

    CHECK(fq_is_squarefree(fq_mul(t0, fq_mul(t1, t2))));
    CHECK_FALSE(fq_is_squarefree(fq_mul(t1, t1)));
    CHECK_FALSE(fq_is_squarefree(FqPoly(3, {0, 0, 0, 1}))); // t^3 = cube
    CHECK(fq_is_squarefree(FqPoly(3, {1, 0, 1})));          // irreducible

    std::vector<FqPoly> fac = fq_factor_squarefree(fq_mul(t0, fq_mul(t1, t2)));
    REQUIRE(fac.size() == 3);
    for (const FqPoly& p : fac) CHECK(p.degree() == 1);
}

TEST_CASE("monic codes round trip") {
    for (long long code = 0; code < 27; ++code) {
        FqPoly f = monic_of_code(3, 3, code);
        CHECK(f.is_monic());
        CHECK(f.degree() == 3);
        CHECK(code_of_monic(f) == code);
    }
    CHECK(fq_to_string(FqPoly(3, {1, 2, 1})) == "t^2+2t+1");
    CHECK(fq_to_string(FqPoly(3, {})) == "0");
    CHECK(fq_to_string(FqPoly(5, {0, 3})) == "3t");
}

TEST_CASE("primitive roots generate the multiplicative group") {
    for (int q : {3, 5, 7, 11}) {
        int g = primitive_root(q);
        int seen = 0, acc = 1;
        do {
            acc = acc * g % q;
            ++seen;
        } while (acc != 1);
        CHECK(seen == q - 1);
    }
}

TEST_CASE("divisor tables") {
    DivisorTable t = dk_table(3, 6, 2);
    CHECK(t.dk_value(fq_monomial(3, 3)) == 4);  // d_2(t^3)
    CHECK(t.dk_of(0, 0) == 1);                  // d_k(1)
    CHECK(t.dk_value(FqPoly(3, {0, 1})) == 2);  // d_2 of a prime
    CHECK(t.is_irreducible(2, code_of_monic(FqPoly(3, {1, 0, 1})))); // t^2+1
    CHECK_FALSE(t.is_irreducible(2, 0));                             // t^2

    DivisorTable t3 = dk_table(3, 4, 3);
    CHECK(t3.dk_value(fq_mul(FqPoly(3, {0, 1}), FqPoly(3, {1, 1}))) == 9); // two primes

    // multiplicativity on seeded coprime pairs
    CounterRng rng(555);
    int found = 0;
    while (found < 60) {
        int df = 1 + static_cast<int>(rng.next_u64() % 3);
        int dg = 1 + static_cast<int>(rng.next_u64() % (6 - df > 3 ? 3 : 6 - df));
        FqPoly f = monic_of_code(3, df, static_cast<long long>(rng.next_u64() % pow_ll(3, df)));
        FqPoly g = monic_of_code(3, dg, static_cast<long long>(rng.next_u64() % pow_ll(3, dg)));
        if (fq_gcd(f, g).degree() != 0) continue;
        ++found;
        CHECK(t.dk_value(fq_mul(f, g)) == t.dk_value(f) * t.dk_value(g));
    }

    CHECK_THROWS_AS(dk_table(4, 3, 2), precondition_error);
    CHECK_THROWS_AS(dk_table(2, 28, 2), budget_error); // 2^28 codes over budget
}

TEST_CASE("interval sums and their variance") {
    // sum over one aligned block equals the hand count
    DivisorTable t = dk_table(3, 2, 2);
    BigInt s = short_interval_sum(t, fq_monomial(3, 2), 0);
    CHECK(s == 9); // d_2(t^2) + d_2(t^2+1) + d_2(t^2+2) = 3 + 2 + 4

    VarianceReport r1 = short_interval_variance(3, 4, 0, 2);
    CHECK(r1.variance == 2);
    CHECK(r1.prediction == 3); // H * I_2(4;2) = 3 * 1
    CHECK(short_interval_variance(3, 5, 0, 2).variance == 8);
    CHECK(short_interval_variance(3, 3, 0, 3).variance == 2);
    CHECK(short_interval_variance(3, 4, 0, 3).variance == 84);

    // theorem range: exactly zero variance, flagged as such
    VarianceReport r0 = short_interval_variance(3, 4, 2, 2);
    CHECK(r0.variance == 0);
    CHECK(r0.both_zero);
    DivisorTable t4 = dk_table(3, 4, 2);
    BigInt first = short_interval_sum(t4, monic_of_code(3, 4, 0), 2);
    for (long long c = 27; c < 81; c += 27)
        CHECK(short_interval_sum(t4, monic_of_code(3, 4, c), 2) == first);

    CHECK_THROWS_AS(short_interval_variance(3, 4, 3, 2), precondition_error);
    CHECK_THROWS_AS(short_interval_variance(3, 1, 0, 2), precondition_error);
}

TEST_CASE("progression variance, direct route") {
    FqPoly Q(3, {1, 0, 1}); // t^2 + 1, irreducible over F_3
    CHECK(ap_variance_direct(3, Q, 2, 2).variance == parse_rational("39/64"));
    CHECK(ap_variance_direct(3, Q, 2, 3).variance == parse_rational("351/64"));
    CHECK(ap_variance_direct(3, Q, 3, 3).variance == parse_rational("111/64"));
    VarianceReport z = ap_variance_direct(3, Q, 3, 2);
    CHECK(z.variance == 0);
    CHECK(z.both_zero); // n = 3 >= k(deg Q - 1) + 1: prediction vanishes too
    CHECK(z.modulus == "t^2+1");
    CHECK(z.support == 8);

    CHECK_THROWS_AS(ap_variance_direct(3, FqPoly(3, {1, 1}), 2, 2),
                    precondition_error); // degree 1 is too small
    CHECK_THROWS_AS(ap_variance_direct(3, FqPoly(3, {1, 1, 2}), 2, 2),
                    precondition_error); // not monic
    CHECK_THROWS_AS(ap_variance_direct(3, fq_mul(FqPoly(3, {1, 1}), FqPoly(3, {1, 1})), 2, 2),
                    precondition_error); // not squarefree
}

TEST_CASE("character groups mod a squarefree modulus") {
    FqPoly Q(3, {1, 0, 1}); // unit group cyclic of order 8
    std::vector<DirichletCharacter> chars = characters_mod(Q);
    REQUIRE(chars.size() == 8);
    CHECK(phi_of(chars) == 8);
    int principal = 0, even = 0;
    for (const auto& ch : chars) {
        principal += ch.principal ? 1 : 0;
        even += ch.even ? 1 : 0;
    }
    CHECK(principal == 1);
    CHECK(even == 4); // kernel of the order-2 constant subgroup

    // orthogonality: sum over characters vanishes off the identity class
    FqPoly f(3, {0, 1});
    std::complex<double> acc(0.0, 0.0);
    for (const auto& ch : chars) acc += ch(f);
    CHECK(std::abs(acc) < 1e-9);
    std::complex<double> at_one(0.0, 0.0);
    for (const auto& ch : chars) at_one += ch(fq_const(3, 1));
    CHECK(std::abs(at_one - std::complex<double>(8.0, 0.0)) < 1e-9);

    // character values multiply
    const DirichletCharacter& ch = chars[3];
    FqPoly g(3, {1, 1});
    std::complex<double> lhs = ch(fq_mod(fq_mul(f, g), Q));
    std::complex<double> rhs = ch(f) * ch(g);
    CHECK(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("coefficient sums against the sieve") {
    FqPoly Q(3, {1, 0, 1});
    std::vector<DirichletCharacter> chars = characters_mod(Q);
    DivisorTable table = dk_table(3, 3, 2);
    for (const auto& ch : chars) {
        if (ch.principal) continue;
        std::complex<double> direct(0.0, 0.0);
        for (long long c = 0; c < 27; ++c) {
            FqPoly f = monic_of_code(3, 3, c);
            direct += static_cast<double>(table.dk_value(f)) * ch(f);
        }
        std::complex<double> viaL = m_coefficient(ch, 3, 2);
        CHECK(std::abs(direct - viaL) < 1e-6);
    }
    CHECK_THROWS_AS(m_coefficient(chars[0], 2, 2), precondition_error); // principal
}

TEST_CASE("character route reproduces the direct variance") {
    FqPoly q3(3, {0, 2, 3, 1}); // t(t+1)(t+2) over F_3
    for (int k : {2, 3})
        for (int n = 2; n <= 4; ++n)
            CHECK(ap_variance_characters(3, q3, n, k) == ap_variance_direct(3, q3, n, k).variance);
    FqPoly q5(5, {0, 1, 1}); // t(t+1) over F_5
    CHECK(ap_variance_characters(5, q5, 3, 2) == ap_variance_direct(5, q5, 3, 2).variance);
}

TEST_CASE("characters mod t^m") {
    std::vector<TmCharacter> chars = tm_characters(5, 3);
    CHECK(chars.size() == 100); // (q-1) q^(m-1)
    CHECK(even_character_count_tm(5, 3) == 25);
    CHECK(even_character_count_tm(3, 2) == 3);

    // multiplicativity of the explicit evaluation
    FqPoly u(5, {1, 2, 3}), v(5, {1, 0, 4}), mod(5, {0, 0, 0, 1});
    const TmCharacter& ch = chars[17];
    std::complex<double> lhs = tm_char_eval(ch, fq_mod(fq_mul(u, v), mod));
    std::complex<double> rhs = tm_char_eval(ch, u) * tm_char_eval(ch, v);
    CHECK(std::abs(lhs - rhs) < 1e-9);

    CHECK_THROWS_AS(tm_characters(2, 3), precondition_error); // needs q >= m
}
