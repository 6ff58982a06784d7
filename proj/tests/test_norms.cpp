#include "hardy/binomial.hpp"
#include "hardy/errors.hpp"
#include "hardy/norms.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace hardy;

TEST_SUITE_BEGIN("norms");

TEST_CASE("generalized binomial coefficients") {
    CHECK(binom_general(Rational(1, 2), 0) == Rational(1));
    CHECK(binom_general(Rational(1, 2), 1) == Rational(1, 2));
    CHECK(binom_general(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(binom_general(Rational(1, 2), 3) == Rational(1, 16));
    CHECK(binom_general(Rational(2), 1) == Rational(2));
    CHECK(binom_general(2.0, 1) == doctest::Approx(2.0));

    // central values: C(1,1/2) = 4/pi, C(4,2) = 6, C(6,3) = 20
    CHECK(central_binomial(1.0) == doctest::Approx(4 / M_PI).epsilon(1e-14));
    CHECK(central_binomial(4.0) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(central_binomial(6.0) == doctest::Approx(20.0).epsilon(1e-14));
}

TEST_CASE("canonicalization") {
    const auto c = canonicalize({std::complex<double>(0, 3), std::complex<double>(-1.5, 0)});
    CHECK(c.scale == doctest::Approx(3.0));
    CHECK(c.y == doctest::Approx(0.5));
    CHECK_THROWS_AS(canonicalize({0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("series norm closed cases") {
    // p = 4, x = 1: 1 + 4 + 1 = 6
    CHECK(norm_series(4, 1.0).value == doctest::Approx(std::pow(6.0, 0.25)).epsilon(1e-14));
    // p = 2: sqrt(1 + x^2) by Parseval
    for (const double x : {0.0, 0.3, 0.8, 1.0}) {
        CHECK(norm_series(2, x).value == doctest::Approx(std::sqrt(1 + x * x)).epsilon(1e-14));
    }
    // p = 1 at x = 1 converges to 4/pi
    CHECK(norm_series(1, 1.0, 1e-10).value == doctest::Approx(4 / M_PI).epsilon(1e-9));
    CHECK_THROWS_AS(series_norm_pow_p(1, 1.0, 1e-10, nullptr, 100), SlowConvergence);
}

TEST_CASE("quadrature norm agrees with closed forms") {
    CHECK(norm_quadrature(2, 1.0).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    // x = 1 with non-integer p/2 routes to the exact central value
    const auto r = norm_quadrature(1, 1.0);
    CHECK(r.method == NormMethod::closed_form);
    CHECK(r.value == doctest::Approx(4 / M_PI).epsilon(1e-14));
    const auto r6 = norm_quadrature(6, 1.0);
    CHECK(r6.value == doctest::Approx(std::pow(20.0, 1.0 / 6)).epsilon(1e-12));
    CHECK_THROWS_AS(norm_quadrature(1, 0.5, 8), std::invalid_argument);
}

TEST_CASE("large exponents keep certified tails") {
    // a = p/2 far above the first block boundary check
    const double v40 = series_norm_pow_p(40, 1.0, 1e-9);
    CHECK(v40 == doctest::Approx(central_binomial(40)).epsilon(1e-11));
    const auto s = norm_series(41, 0.5, 1e-11);
    const auto q = norm_quadrature(41, 0.5, 16, 1e-11);
    CHECK(std::fabs(s.value - q.value) <= s.error_bound + q.error_bound + 1e-11 * s.value);
}

TEST_CASE("cross-method agreement") {
    for (const double p : {1.0, 1.5, 2.0, 3.0, 4.0, 5.0}) {
        for (int i = 0; i <= 9; ++i) {
            const double x = i / 10.0;
            const auto s = norm_series(p, x, 1e-11);
            const auto q = norm_quadrature(p, x, 16, 1e-11);
            INFO("p=", p, " x=", x);
            CHECK(std::fabs(s.value - q.value) <=
                  s.error_bound + q.error_bound + 1e-12 * s.value);
        }
    }
}

TEST_CASE("series/quadrature cross-check at p=1, x=0.5") {
    const auto s = norm_series(1, 0.5, 1e-11);
    const auto q = norm_quadrature(1, 0.5, 16, 1e-11);
    CHECK(std::fabs(s.value - q.value) < 1e-9);
}

TEST_CASE("hp_norm routing and values") {
    // single monomial: any p gives the coefficient magnitude
    for (const double p : {1.0, 2.5, 4.0}) {
        CHECK(hp_norm({3.0, 0.0}, p).value == doctest::Approx(3.0).epsilon(1e-12));
    }
    // (1,1) at p=1: 4/pi
    CHECK(hp_norm({1.0, 1.0}, 1).value == doctest::Approx(4 / M_PI).epsilon(1e-9));
    // (1, 3/4) at p=4: (913/256)^{1/4}, exact finite sum
    const Rational exact = even_norm_pow_p(Rational(3, 4), 4);
    CHECK(exact == Rational(913, 256));
    CHECK(hp_norm({1.0, 0.75}, 4).value ==
          doctest::Approx(std::pow(913.0 / 256.0, 0.25)).epsilon(1e-14));
    CHECK_THROWS_AS(hp_norm({0.0, 0.0}, 2), std::invalid_argument);
}

TEST_CASE("hp_norm homogeneity and rotation invariance") {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> mag(0.1, 2.0);
    std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
    for (int iter = 0; iter < 25; ++iter) {
        const std::complex<double> c1 = std::polar(mag(rng), ang(rng));
        const std::complex<double> c2 = std::polar(mag(rng), ang(rng));
        const double p = 1 + 3 * mag(rng) / 2;
        const double base = hp_norm({c1, c2}, p).value;

        const std::complex<double> lambda = std::polar(mag(rng), ang(rng));
        CHECK(hp_norm({lambda * c1, lambda * c2}, p).value ==
              doctest::Approx(std::abs(lambda) * base).epsilon(1e-12));
        CHECK(hp_norm({std::abs(c1), std::abs(c2)}, p).value ==
              doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("hp_norm is nondecreasing in p") {
    for (int iy = 0; iy <= 10; ++iy) {
        const double y = iy / 10.0;
        double prev = 0;
        for (const double p : {1.0, 1.5, 2.0, 3.0, 4.0, 5.0}) {
            const double v = hp_norm({1.0, y}, p).value;
            CHECK(v >= prev - 1e-12);
            prev = v;
        }
    }
}

TEST_CASE("central binomial four-route agreement") {
    const auto r2 = check_central_binomial(2);
    CHECK(r2.gamma_value == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(r2.max_deviation < 1e-10);

    const auto r4 = check_central_binomial(4);
    CHECK(r4.gamma_value == doctest::Approx(6.0).epsilon(1e-13));
    CHECK(r4.max_deviation < 1e-10);

    const auto r1 = check_central_binomial(1);
    CHECK(r1.gamma_value == doctest::Approx(4 / M_PI).epsilon(1e-14));
    CHECK(r1.max_deviation < 1e-8);
}

TEST_SUITE_END();
