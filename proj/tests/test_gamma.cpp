// Piecewise-polynomial reconstruction of gamma_k, the shape and arithmetic
// factors, the variance predictors, and the Fourier limit.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "secular/gamma.hpp"

using namespace secular;

TEST_CASE("rational evaluation matches the known values") {
    CHECK(gamma_at_rational(2, parse_rational("1/2")) == parse_rational("1/48"));
    CHECK(gamma_at_rational(2, parse_rational("4/5")) == parse_rational("32/375"));
    CHECK(gamma_at_rational(3, parse_rational("3/2")) == parse_rational("103/573440"));
    CHECK(gamma_at_rational(3, parse_rational("7/5")) == parse_rational("2639233/15750000000"));
    CHECK(gamma_at_rational(2, Rational(1)) == parse_rational("1/6"));
    CHECK(gamma_at_rational(2, Rational(0)) == 0);
    CHECK(gamma_at_rational(2, Rational(2)) == 0);
}

TEST_CASE("k = 1 is the constant 1") {
    CHECK(gamma_at_rational(1, parse_rational("1/2")) == 1);
    CHECK(gamma_at_rational(1, Rational(1)) == 1);
    PiecewiseGamma g = gamma_full(1);
    REQUIRE(g.pieces.size() == 1);
    CHECK(g.pieces[0] == DensePoly<Rational>::constant(Rational(1)));
}

TEST_CASE("reconstruction preconditions and budgets") {
    CHECK_THROWS_AS(gamma_at_rational(2, parse_rational("5/2")), precondition_error);
    CHECK_THROWS_AS(gamma_at_rational(2, Rational(-1)), precondition_error);
    CHECK_THROWS_AS(gamma_at_rational(5, parse_rational("1/2")), budget_error);
    CHECK_THROWS_AS(gamma_full(5), budget_error);
    CHECK_THROWS_AS(gamma_at_rational(2, make_rational(BigInt(1), BigInt(200001))),
                    budget_error);
}

TEST_CASE("piecewise structure of gamma_2") {
    PiecewiseGamma g = gamma_full(2);
    REQUIRE(g.pieces.size() == 2);
    // first piece c^3/6
    DensePoly<Rational> first;
    first.add_at(3, make_rational(BigInt(1), BigInt(6)));
    CHECK(g.pieces[0] == first);
    // second piece (2-c)^3/6, checked at a point
    CHECK(g.eval_exact(parse_rational("3/2")) == parse_rational("1/48"));
    CHECK(g.eval_exact(Rational(1)) == parse_rational("1/6")); // breakpoint
    CHECK(g.eval_exact(Rational(2)) == 0);                     // right endpoint
    CHECK(g.eval(0.5) == Catch::Approx(1.0 / 48.0).epsilon(1e-12));
}

TEST_CASE("reflection symmetry at rational points") {
    for (const char* s : {"1/3", "3/4", "5/4", "9/5"}) {
        Rational c = parse_rational(s);
        CHECK(gamma_at_rational(2, c) == gamma_at_rational(2, Rational(2) - c));
    }
    CHECK(gamma_at_rational(3, parse_rational("1/2")) ==
          gamma_at_rational(3, parse_rational("5/2")));
}

TEST_CASE("piece interpolation matches pointwise reconstruction") {
    DensePoly<Rational> mid = gamma_piece(3, 1);
    CHECK(mid.eval(parse_rational("3/2")) == parse_rational("103/573440"));
    CHECK_THROWS_AS(gamma_piece(2, 2), precondition_error);
}

TEST_CASE("Monte-Carlo gamma concurs with the exact curve") {
    McEstimate e = gamma_monte_carlo(2, 0.5, 40000, 7);
    CHECK(std::abs(e.mean - 1.0 / 48.0) <= 5.0 * e.std_error);
    // thread-count independence, bitwise
    McEstimate a = gamma_monte_carlo(3, 1.5, 5000, 11, 1);
    McEstimate b = gamma_monte_carlo(3, 1.5, 5000, 11, 4);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);

    CHECK_THROWS_AS(gamma_monte_carlo(2, 0.0, 5000, 1), precondition_error);
    CHECK_THROWS_AS(gamma_monte_carlo(2, 2.0, 5000, 1), precondition_error);
    CHECK_THROWS_AS(gamma_monte_carlo(2, 0.5, 999, 1), precondition_error);
}

TEST_CASE("shape factor") {
    CHECK(script_P(2, parse_rational("1/4")) == parse_rational("1/48"));
    CHECK(script_P(3, parse_rational("3/5")) == parse_rational("1/15750000000"));
    CHECK_THROWS_AS(script_P(2, Rational(0)), precondition_error);
    CHECK_THROWS_AS(script_P(2, parse_rational("1/2")), precondition_error); // 1 - 1/k
    CHECK_THROWS_AS(script_P(1, parse_rational("1/4")), precondition_error);
}

TEST_CASE("arithmetic constant") {
    CHECK(a_k_constant(1) == 1.0);
    // a_2 = 6/pi^2, truncation error well under 1e-3 at cutoff 10^4
    double a2 = a_k_constant(2, 10000);
    CHECK(std::abs(a2 - 6.0 / (M_PI * M_PI)) < 1e-3);
    // cutoff monotonicity: more primes move the product down
    CHECK(a_k_constant(2, 2000) > a2);
    CHECK_THROWS_AS(a_k_constant(0), precondition_error);
}

TEST_CASE("short-interval prediction decomposes") {
    SiPrediction p = predict_variance_si(2, 1.0e6, 0.25);
    CHECK(p.value == Catch::Approx(p.a_k * p.shape * p.H * p.log_power).epsilon(1e-12));
    CHECK(p.H == Catch::Approx(std::pow(1.0e6, 0.25)).epsilon(1e-12));
    CHECK(p.shape == Catch::Approx(1.0 / 48.0).epsilon(1e-9)); // exact shape at delta = 1/4
    CHECK_THROWS_AS(predict_variance_si(2, 1.0e6, 0.75), precondition_error);
    CHECK_THROWS_AS(predict_variance_si(2, 0.5, 0.25), precondition_error);
}

TEST_CASE("progression prediction covers the closed window") {
    ApPrediction p = predict_variance_ap(2, 1000.0, 1000.0); // X = Q sits on the boundary
    CHECK(p.c == 1.0);
    CHECK(p.gamma_c == Catch::Approx(1.0 / 6.0).epsilon(1e-12));
    ApPrediction mid = predict_variance_ap(2, 1.0e6, 1.0e4);
    CHECK(mid.c == Catch::Approx(1.5).epsilon(1e-12));
    CHECK(mid.value ==
          Catch::Approx((1.0e6 / 1.0e4) * mid.a_k * mid.gamma_c *
                        std::pow(std::log(1.0e4), 3)).epsilon(1e-12));
    CHECK_THROWS_AS(predict_variance_ap(2, 1.0e9, 10.0), precondition_error); // c = 9 > k
    CHECK_THROWS_AS(predict_variance_ap(2, 2.0, 1000.0), precondition_error); // c < 1
}

TEST_CASE("Riemann sums approach the Fourier reference") {
    // k = 1: the sum telescopes to (N+1)/N exactly
    std::complex<double> w1 = w_k_riemann(1, 0.0, 10);
    CHECK(w1.real() == Catch::Approx(1.1).epsilon(1e-12));
    CHECK(w1.imag() == 0.0);

    PiecewiseGamma g2 = gamma_full(2);
    // alpha = 0 reference is the exact integral of gamma_2, which is 1/12
    std::complex<double> ref0 = gamma_fourier_reference(g2, 0.0);
    CHECK(ref0.real() == Catch::Approx(1.0 / 12.0).epsilon(1e-12));
    CHECK(ref0.imag() == 0.0);

    for (double alpha : {0.0, 1.0}) {
        std::complex<double> ref = gamma_fourier_reference(g2, alpha);
        double err40 = std::abs(w_k_riemann(2, alpha, 40) - ref);
        double err80 = std::abs(w_k_riemann(2, alpha, 80) - ref);
        CHECK(err80 < err40); // refinement improves the sum
        CHECK(err80 < 10.0 / 80.0);
    }
}
