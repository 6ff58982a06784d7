#include "hardy/errors.hpp"
#include "hardy/piext.hpp"
#include "hardy/rational.hpp"
#include "hardy/ratpoly.hpp"

#include <doctest.h>

#include <random>

using namespace hardy;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 20);
    return {num(rng), den(rng)};
}

RatPoly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = random_rational(rng);
    return RatPoly(std::move(c));
}

PiExt random_piext(std::mt19937& rng) {
    std::uniform_int_distribution<int> terms(0, 3);
    PiExt r;
    const int n = terms(rng);
    for (int k = 0; k <= n; ++k) {
        r += PiExt::inv_pi_term(random_rational(rng), static_cast<std::size_t>(k));
    }
    return r;
}

} // namespace

TEST_SUITE_BEGIN("exact_algebra");

TEST_CASE("rational basics and invariants") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).den() > 0);
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-5, 7).abs() == Rational(5, 7));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) < Rational(2, 3));
}

TEST_CASE("polynomial arithmetic matches small expansions") {
    const RatPoly one_plus_2x{Rational(1), Rational(2)};
    CHECK(one_plus_2x.pow(2) == RatPoly{Rational(1), Rational(4), Rational(4)});

    const RatPoly a{Rational(1), Rational(-1)}; // 1 - x
    const RatPoly b{Rational(1), Rational(1)};  // 1 + x
    CHECK(a * b == RatPoly{Rational(1), Rational(0), Rational(-1)});

    // (1+4x+x^2)^3 at x=1 two ways: expand-then-evaluate vs evaluate-then-cube
    const RatPoly quad{Rational(1), Rational(4), Rational(1)};
    const RatPoly cubed = quad.pow(3);
    CHECK(cubed.degree() == 6);
    CHECK(cubed.evaluate(Rational(1)) == Rational(216));
    CHECK(quad.evaluate(Rational(1)).pow(3) == Rational(216));
}

TEST_CASE("exact division and failure modes") {
    const RatPoly num{Rational(1), Rational(0), Rational(-1)}; // 1 - x^2
    const RatPoly den{Rational(1), Rational(-1)};              // 1 - x
    CHECK(poly_divide_exact(num, den) == RatPoly{Rational(1), Rational(1)});

    const RatPoly sq{Rational(1), Rational(-2), Rational(1)}; // (1-x)^2
    CHECK(poly_divide_exact(sq, den * den) == RatPoly{Rational(1)});

    CHECK_THROWS_AS(poly_divide_exact(RatPoly{Rational(1), Rational(1)}, den),
                    NonzeroRemainder);
    CHECK_THROWS_AS(poly_divide_exact(num, RatPoly{}), std::domain_error);
}

TEST_CASE("sign patterns") {
    const RatPoly p{Rational(1), Rational(4), Rational(4)};
    const auto sp = p.sign_pattern();
    REQUIRE(sp.size() == 3);
    CHECK(sp[0] == Sign::positive);
    CHECK(sp[1] == Sign::positive);
    CHECK(sp[2] == Sign::positive);

    const RatPoly q{Rational(1), Rational(0), Rational(-1)};
    const auto sq = q.sign_pattern();
    CHECK(sq[0] == Sign::positive);
    CHECK(sq[1] == Sign::zero);
    CHECK(sq[2] == Sign::negative);
}

TEST_CASE("derivative and evaluation") {
    const RatPoly p{Rational(3), Rational(0), Rational(1, 2)}; // 3 + x^2/2
    CHECK(p.derivative() == RatPoly{Rational(0), Rational(1)});
    CHECK(p.evaluate(Rational(2)) == Rational(5));
}

TEST_CASE("pi-extension arithmetic") {
    const PiExt four_over_pi = PiExt::inv_pi_term(Rational(4), 1);
    const PiExt sigma2_1 = four_over_pi - PiExt(Rational(325, 256));
    CHECK(sigma2_1 + PiExt(Rational(325, 256)) == four_over_pi);

    // (-25/(256 pi)) / (-15/pi) = 5/768
    const PiExt num = PiExt::inv_pi_term(Rational(-25, 256), 1);
    const PiExt den = PiExt::inv_pi_term(Rational(-15), 1);
    const PiExt q = piext_divide_exact(num, den);
    CHECK(q.is_rational());
    CHECK(q.rational_part() == Rational(5, 768));

    // (1 + 1/pi) / (1/pi) leaves the ring
    const PiExt mixed = PiExt(Rational(1)) + PiExt::inv_pi_term(Rational(1), 1);
    CHECK_THROWS_AS(piext_divide_exact(mixed, PiExt::inv_pi_term(Rational(1), 1)),
                    InexactDivision);
    CHECK_THROWS_AS(piext_divide_exact(mixed, PiExt()), std::domain_error);

    // division by a plain rational is always exact
    CHECK(piext_divide_exact(mixed, PiExt(Rational(2))) ==
          PiExt(Rational(1, 2)) + PiExt::inv_pi_term(Rational(1, 2), 1));

    CHECK(four_over_pi.to_double() == doctest::Approx(4 / M_PI).epsilon(1e-14));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 200; ++iter) {
        const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
    for (int iter = 0; iter < 50; ++iter) {
        const RatPoly a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
    for (int iter = 0; iter < 50; ++iter) {
        const PiExt a = random_piext(rng), b = random_piext(rng), c = random_piext(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("division inverts multiplication on random polynomials") {
    std::mt19937 rng(7);
    int done = 0;
    while (done < 60) {
        const RatPoly a = random_poly(rng, 8);
        const RatPoly b = random_poly(rng, 8);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(poly_divide_exact(a * b, b) == a);
        ++done;
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 60; ++iter) {
        const RatPoly a = random_poly(rng, 7);
        const RatPoly b = random_poly(rng, 7);
        const Rational r = random_rational(rng);
        CHECK((a * b).evaluate(r) == a.evaluate(r) * b.evaluate(r));
        CHECK((a + b).evaluate(r) == a.evaluate(r) + b.evaluate(r));
    }
}

TEST_SUITE_END();
