// The four routes to I_k(m;N) and the identities tying them together.
#include <catch2/catch_amalgamated.hpp>

#include "secular/moments.hpp"

using namespace secular;

TEST_CASE("contingency counts") {
    CHECK(contingency_count({2, 1, 1}, {3, 1}) == 3);
    CHECK(contingency_count({1, 1}, {1, 1}) == 2);
    CHECK(contingency_count({0}, {0}) == 1);
    CHECK(contingency_count({2}, {1, 1}) == 1);
    CHECK_THROWS_AS(contingency_count({1}, {2}), precondition_error);
    CHECK_THROWS_AS(contingency_count({-1}, {-1}), precondition_error);
}

TEST_CASE("monotone triangle counts are irreducible dimensions") {
    CHECK(monotone_triangle_count({0}) == 1);
    CHECK(monotone_triangle_count({1, 0}) == 2);
    CHECK(monotone_triangle_count({2, 1, 0}) == 8);
    CHECK(monotone_triangle_count({1, 1, 0}) == 3);
    CHECK(monotone_triangle_count({3, 3, 3}) == 1);
    CHECK_THROWS_AS(monotone_triangle_count({0, 1}), precondition_error);
}

TEST_CASE("closed forms on the outer ranges") {
    CHECK(*ik_closed_form(2, 3, 5) == 20);          // C(3+3,3)
    CHECK(*ik_closed_form(2, 7, 5) == 20);          // reflected
    CHECK(*ik_closed_form(3, 0, 4) == 1);
    CHECK(*ik_closed_form(1, 2, 4) == 1);           // k = 1: everything is 1
    CHECK_FALSE(ik_closed_form(3, 5, 4).has_value()); // middle range
    CHECK_THROWS_AS(ik_closed_form(2, 11, 5), precondition_error);
    CHECK_THROWS_AS(ik_closed_form(2, -1, 5), precondition_error);
}

TEST_CASE("brute force equals the lattice DP on small grids") {
    for (int k : {1, 2, 3})
        for (long long N = 1; N <= 4; ++N) {
            std::vector<BigInt> dist = ik_lattice_distribution(k, N);
            REQUIRE(dist.size() == static_cast<size_t>(k * N + 1));
            for (long long m = 0; m <= k * N; ++m)
                CHECK(ik_bruteforce(k, m, N) == dist[m]);
        }
    CHECK_THROWS_AS(ik_bruteforce(4, 0, 2), budget_error);
    CHECK_THROWS_AS(ik_bruteforce(2, 0, 7), budget_error);
}

TEST_CASE("anti-diagonal split equals the lattice DP") {
    for (int k : {2, 3, 4})
        for (long long N = 1; N <= 5; ++N) {
            std::vector<BigInt> dist = ik_lattice_distribution(k, N);
            for (long long m = 0; m <= k * N; ++m)
                CHECK(ik_antidiagonal_split(k, m, N) == dist[m]);
        }
}

TEST_CASE("moment tables") {
    MomentTable t1 = moment_table(1, 4);
    for (const BigInt& v : t1.values) CHECK(v == 1);

    MomentTable t2 = moment_table(2, 2);
    std::vector<long> expect{1, 4, 10, 4, 1};
    REQUIRE(t2.values.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) CHECK(t2.values[i] == expect[i]);

    CHECK_THROWS_AS(moment_table(9, 40), budget_error); // k*N over budget
    CHECK_THROWS_AS(moment_table(2, 0), precondition_error);
}

TEST_CASE("box product totals") {
    CHECK(macmahon_box(2, 2, 20) == 19481);
    // the box product is the full mass of the moment table
    for (int k : {2, 3})
        for (long long N : {3LL, 5LL}) {
            MomentTable t = moment_table(k, N);
            BigInt total(0);
            for (const BigInt& v : t.values) total += v;
            CHECK(total == macmahon_box(k, k, N));
        }
}

TEST_CASE("middle closed form for k = 3") {
    CHECK(ik_value(3, 15, 10) == 144743);
    for (long long N : {4LL, 7LL}) {
        MomentTable t = moment_table(3, N);
        for (long long m = N; m <= 2 * N; ++m) // overlaps both flanks at the ends
            CHECK(i3_middle_closed_form(N, m) == t.values[m]);
    }
}

TEST_CASE("value dispatcher covers every range") {
    std::string branch;
    CHECK(ik_value(2, -3, 4, &branch) == 0);
    CHECK(branch == "zero-outside-support");
    CHECK(ik_value(2, 99, 4, &branch) == 0);
    CHECK(branch == "zero-outside-support");
    CHECK(ik_value(2, 2, 4, &branch) == 10);
    CHECK(branch == "binomial-low");
    CHECK(ik_value(2, 6, 4, &branch) == 10);
    CHECK(branch == "binomial-high");
    CHECK(ik_value(3, 15, 10, &branch) == 144743);
    CHECK(branch == "middle-closed-form");
    std::vector<BigInt> d4 = ik_lattice_distribution(4, 4);
    CHECK(ik_value(4, 8, 4, &branch) == d4[8]);
    CHECK(branch == "antidiagonal-split");
    // functional equation across the whole support
    for (long long m = 0; m <= 16; ++m) CHECK(ik_value(4, m, 4) == ik_value(4, 16 - m, 4));
    CHECK(ik_value(2, 0, 0) == 1); // empty matrix: the constant term is 1
}

TEST_CASE("generating functions expand to the tables") {
    for (long long N = 1; N <= 8; ++N) {
        MomentTable t = moment_table(2, N);
        DensePoly<Rational> p = pk_closed_form(2, N);
        CHECK(p.degree() <= 2 * N);
        for (long long m = 0; m <= 2 * N; ++m) CHECK(p.get(m) == Rational(t.values[m]));
    }
    for (long long N = 1; N <= 6; ++N) { // small N exercises exponent collisions
        MomentTable t = moment_table(3, N);
        DensePoly<Rational> p = pk_closed_form(3, N);
        for (long long m = 0; m <= 3 * N; ++m) CHECK(p.get(m) == Rational(t.values[m]));
    }
    CHECK_THROWS_AS(pk_closed_form(4, 3), precondition_error);
}
