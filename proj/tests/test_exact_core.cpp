// Exact arithmetic, polynomials, interpolation, and the counter RNG.
#include <catch2/catch_amalgamated.hpp>

#include "secular/exact.hpp"
#include "secular/poly.hpp"
#include "secular/interp.hpp"
#include "secular/rng.hpp"

using namespace secular;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    CHECK_THROWS_AS(binomial(-1, 0), precondition_error);

    CHECK(binomial_or_zero(-3, 2) == 0);
    CHECK(binomial_or_zero(6, 2) == 15);
}

TEST_CASE("factorials and powers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(8) == 40320);
    CHECK(pow_int(BigInt(3), 5) == 243);
    CHECK(pow_int(BigInt(2), 0) == 1);
    CHECK(pow_ll(3, 4) == 81);
    CHECK(pow_ll(7, 0) == 1);
}

TEST_CASE("rational construction and rendering") {
    Rational r = make_rational(BigInt(6), BigInt(-8));
    CHECK(r.get_num() == -3); // canonical: positive denominator
    CHECK(r.get_den() == 4);
    CHECK(rational_str(r) == "-3/4");
    CHECK(rational_str(Rational(5)) == "5/1"); // integers keep the slash
    CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), precondition_error);

    CHECK(rational_pow(make_rational(BigInt(2), BigInt(3)), 3) ==
          make_rational(BigInt(8), BigInt(27)));
    CHECK(rational_pow(make_rational(BigInt(2), BigInt(3)), 0) == 1);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("22/7") == make_rational(BigInt(22), BigInt(7)));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(parse_rational("6/4") == make_rational(BigInt(3), BigInt(2)));
    CHECK_THROWS_AS(parse_rational("abc"), precondition_error);
    CHECK_THROWS_AS(parse_rational("1/0"), precondition_error);
    // round trip through the printed form
    Rational r = make_rational(BigInt(-103), BigInt(573440));
    CHECK(parse_rational(rational_str(r)) == r);
}

TEST_CASE("128-bit conversion") {
    unsigned __int128 v = (static_cast<unsigned __int128>(0x123456789abcdefULL) << 64) | 42u;
    BigInt expect = (BigInt("81985529216486895") << 64) + 42;
    CHECK(from_u128(v) == expect);
    CHECK(from_u128(0) == 0);
}

TEST_CASE("dense polynomial basics") {
    DensePoly<Rational> p(std::vector<Rational>{Rational(1), Rational(0), Rational(3)});
    CHECK(p.degree() == 2);
    CHECK(p.get(0) == 1);
    CHECK(p.get(1) == 0);
    CHECK(p.get(7) == 0); // out of range reads as zero
    CHECK(p.eval(Rational(2)) == 13);

    DensePoly<Rational> z(std::vector<Rational>{Rational(0), Rational(0)});
    CHECK(z.degree() == -1); // trailing zeros trim to the zero polynomial
}

TEST_CASE("add_at accumulates and cancels") {
    DensePoly<Rational> p;
    p.add_at(3, Rational(2));
    p.add_at(3, Rational(5)); // collision: coefficients add
    CHECK(p.get(3) == 7);
    p.add_at(3, Rational(-7)); // exact cancellation trims the degree
    CHECK(p.degree() == -1);
}

TEST_CASE("polynomial ring operations") {
    DensePoly<Rational> a(std::vector<Rational>{Rational(1), Rational(1)});  // 1 + x
    DensePoly<Rational> b(std::vector<Rational>{Rational(-1), Rational(1)}); // -1 + x
    DensePoly<Rational> prod = a * b;
    CHECK(prod.get(0) == -1);
    CHECK(prod.get(1) == 0);
    CHECK(prod.get(2) == 1);
    CHECK((a + b).get(0) == 0);
    CHECK((a - b).get(0) == 2);
    CHECK((a * Rational(3)).get(1) == 3);
    CHECK(a.shifted(2).get(3) == 1);
    CHECK(a.shifted(2).get(0) == 0);
}

TEST_CASE("truncated series inverse") {
    // (1 - x)^-1 = 1 + x + x^2 + ...
    DensePoly<Rational> oneminus(std::vector<Rational>{Rational(1), Rational(-1)});
    DensePoly<Rational> inv = oneminus.truncated_inverse(6);
    for (size_t i = 0; i < 6; ++i) CHECK(inv.get(i) == 1);
    // product is 1 through the truncation order
    DensePoly<Rational> prod = oneminus * inv;
    CHECK(prod.get(0) == 1);
    for (size_t i = 1; i < 6; ++i) CHECK(prod.get(i) == 0);

    DensePoly<Rational> no_unit(std::vector<Rational>{Rational(0), Rational(1)});
    CHECK_THROWS_AS(no_unit.truncated_inverse(3), precondition_error);
}

TEST_CASE("exact interpolation recovers polynomials") {
    // y = x^2 - 3x + 2 through 4 nodes (one more than needed)
    std::vector<Rational> xs, ys;
    for (long v : {0L, 1L, 2L, 5L}) {
        xs.emplace_back(v);
        ys.emplace_back(v * v - 3 * v + 2);
    }
    DensePoly<Rational> p = interpolate(xs, ys);
    CHECK(p.degree() == 2);
    CHECK(p.get(0) == 2);
    CHECK(p.get(1) == -3);
    CHECK(p.get(2) == 1);

    // rational nodes
    std::vector<Rational> rx{make_rational(BigInt(1), BigInt(2)),
                             make_rational(BigInt(3), BigInt(2))};
    std::vector<Rational> ry{Rational(1), Rational(3)};
    DensePoly<Rational> line = interpolate(rx, ry);
    CHECK(line.eval(make_rational(BigInt(1), BigInt(1))) == 2);

    CHECK_THROWS_AS(interpolate({Rational(1), Rational(1)}, {Rational(0), Rational(0)}),
                    precondition_error);
    CHECK_THROWS_AS(interpolate({}, {}), precondition_error);

    DensePoly<Rational> q = interpolate_at_integers({1, 2, 3}, {Rational(1), Rational(4), Rational(9)});
    CHECK(q.get(2) == 1);
}

TEST_CASE("counter RNG is position-addressable and splittable") {
    CounterRng a(12345), b(12345);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    // same key, explicit counter start: picks up mid-stream
    CounterRng c(12345, 50);
    CounterRng d(12345);
    for (int i = 0; i < 50; ++i) d.next_u64();
    for (int i = 0; i < 10; ++i) CHECK(c.next_u64() == d.next_u64());

    // split children differ from the parent and from each other
    CounterRng root(777);
    CounterRng s0 = root.split(0), s1 = root.split(1);
    CHECK(s0.next_u64() != s1.next_u64());
    CHECK(root.split(0).key() == root.split(0).key()); // split is pure

    CounterRng u(9);
    for (int i = 0; i < 1000; ++i) {
        double x = u.next_unit();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}
