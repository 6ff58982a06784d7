#include "hardy/dual.hpp"
#include "hardy/norms.hpp"
#include "hardy/region.hpp"

#include <doctest.h>

#include <cmath>

using namespace hardy;

TEST_SUITE_BEGIN("region");

TEST_CASE("classification of the printed samples") {
    const double b = 2 / M_PI;

    // diagonal boundary point: both margins vanish, admissible
    const auto diag = classify(b, b, false);
    CHECK(diag.verdict == Verdict::ADMISSIBLE_BY_SUFFICIENT);
    CHECK(diag.necessary_margin == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::fabs(diag.sufficient_margin) < 1e-12);

    // 0.7 on the diagonal violates the necessary condition
    const auto no = classify(0.7, 0.7, false);
    CHECK(no.verdict == Verdict::NOT_ADMISSIBLE);
    CHECK(no.necessary_margin > 0);

    // (0.999, 0): bounds inconclusive, exact dual norm is 0.999
    const auto edge = classify(0.999, 0.0, false);
    CHECK(edge.verdict == Verdict::INDETERMINATE);
    const auto edge_exact = classify(0.999, 0.0, true);
    CHECK(edge_exact.verdict == Verdict::ADMISSIBLE_BY_EXACT);
    REQUIRE(edge_exact.dual_norm.has_value());
    CHECK(*edge_exact.dual_norm == doctest::Approx(0.999).epsilon(1e-9));

    // (0.9, 0.2): passes the sufficient condition outright
    const auto mid = classify(0.9, 0.2, false);
    CHECK(mid.verdict == Verdict::ADMISSIBLE_BY_SUFFICIENT);

    // the zero map
    const auto zero = classify(0.0, 0.0, true);
    CHECK(zero.verdict == Verdict::ADMISSIBLE_BY_SUFFICIENT);
}

TEST_CASE("moduli only: phases do not change the verdict") {
    const auto a = classify({0.3, 0.4}, {0.0, -0.45}, true);
    const auto b = classify(0.5, 0.45, true);
    CHECK(a.verdict == b.verdict);
    CHECK(a.necessary_margin == doctest::Approx(b.necessary_margin));
    CHECK(a.sufficient_margin == doctest::Approx(b.sufficient_margin));
}

TEST_CASE("borderline flag on the exact critical curve") {
    // pick an off-diagonal point with dual norm exactly 1: it passes the
    // necessary condition, fails the sufficient one, and the exact
    // resolution lands within tolerance of the critical value
    const double scale = 1.0 / hq_dual_norm(1.0, 0.5).value;
    const auto c = classify(scale, 0.5 * scale, true, 1e-7);
    CHECK(c.necessary_margin < 0);
    CHECK(c.sufficient_margin > 0);
    CHECK(c.borderline);
    CHECK(c.verdict == Verdict::INDETERMINATE);
    REQUIRE(c.dual_norm.has_value());
    CHECK(*c.dual_norm == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("extremal map values and disc containment") {
    CHECK(std::abs(extremal_map(0.5, 0.0)) == 0.0);
    CHECK_THROWS_AS(extremal_map(1.0, {1.0, 0.0}), std::invalid_argument);

    // |c| = 2/pi keeps the image inside the closed disc
    const auto in = extremal_map_disc_scan(2 / M_PI, 20000);
    CHECK(in.max_abs <= 1.0);
    CHECK(in.max_abs > 0.99); // and the bound is nearly attained

    // slightly larger c escapes near z = +-1
    const auto out = extremal_map_disc_scan(2 / M_PI + 0.01, 20000);
    CHECK(out.max_abs > 1.0);
    CHECK(std::abs(out.argmax_z.real()) > 0.9);
}

TEST_CASE("extremal map derivative facts at the origin") {
    // finite-difference Wirtinger derivatives of f = c*Arg((i-z)/(i+z))
    const std::complex<double> c(0.3, -0.2);
    const double h = 1e-6;
    const auto f = [&](std::complex<double> z) { return extremal_map(c, z); };
    const std::complex<double> fx = (f({h, 0}) - f({-h, 0})) / (2 * h);
    const std::complex<double> fy = (f({0, h}) - f({0, -h})) / (2 * h);
    const std::complex<double> i(0, 1);
    const std::complex<double> d = 0.5 * (fx - i * fy);
    const std::complex<double> dbar = 0.5 * (fx + i * fy);
    CHECK(std::abs(d - c) < 1e-8);
    CHECK(std::abs(dbar - c) < 1e-8);
}

TEST_CASE("counterexample norm closed cases") {
    // p = 4: norm^4 = 1 - u^2 + u^4 with u = eps^2, always below 1
    for (const double eps : {0.1, 0.3, 0.5}) {
        const double u = eps * eps;
        const double expect = std::pow(1 - u * u + u * u * u * u, 0.25);
        CHECK(counterexample_norm(4, eps) == doctest::Approx(expect).epsilon(1e-12));
        CHECK(counterexample_norm(4, eps) < 1.0);
    }
    // p = 5 at eps = 0.05 clears 1 by roughly (p/4-1) eps^2
    const double v = counterexample_norm(5, 0.05);
    CHECK(v > 1.0);
    CHECK(v == doctest::Approx(1 + 0.25 * 0.0025).epsilon(1e-4));
    CHECK_THROWS_AS(counterexample_norm(5, 0.99), std::invalid_argument);
}

TEST_CASE("expansion slope (norm - 1)/eps^2 -> p/4 - 1") {
    for (const double p : {4.25, 4.5, 5.0, 8.0}) {
        const double eps = 0.01;
        const double slope = (counterexample_norm(p, eps) - 1) / (eps * eps);
        INFO("p=", p);
        CHECK(std::fabs(slope - (p / 4 - 1)) < 0.05 * (p / 4 - 1));
    }
}

TEST_CASE("Riesz projection of the truncated counterexample symbol") {
    const Rational eps(1, 7);
    for (const unsigned trunc : {1u, 3u, 10u}) {
        const TrigPoly psi = counterexample_psi(eps, trunc);
        const TrigPoly phi = riesz_project(psi);
        const Rational head = Rational(1) - eps * eps;
        CHECK(phi == TrigPoly::monomial(1, 0, CRational(-eps)) +
                         TrigPoly::monomial(0, 1, CRational(head)));
    }
}

TEST_CASE("sharpness search") {
    const auto found = sharpness_search(4.5);
    REQUIRE(found.has_value());
    CHECK(found->norm > 1 + 1e-6);
    CHECK(found->eps > 0.0);
    CHECK(found->eps <= 0.5);

    CHECK_FALSE(sharpness_search(4.0).has_value());
}

TEST_CASE("criteria orderings on a coarse grid") {
    // sufficient => exact-admissible and exact => necessary
    for (int i = 0; i <= 12; ++i) {
        for (int j = 0; j <= 12; ++j) {
            const double a = 0.8 * i / 12;
            const double b = 0.8 * j / 12;
            if (a == 0 && b == 0) continue;
            const auto cls = classify(a, b, false);
            const double scale = std::max(a, b);
            const double dual = scale * hq_dual_norm(1.0, std::min(a, b) / scale).value;
            if (cls.sufficient_margin <= 0) CHECK(dual <= 1 + 1e-7);
            if (dual <= 1.0) CHECK(cls.necessary_margin <= 1e-7);
        }
    }
}

TEST_CASE("diagonal crossing at 2/pi") {
    // dual norm along alpha = beta = t is t * ||z1+z2||_{(H1)*}; bisect the
    // crossing of 1
    const double unit_dual = hq_dual_norm(1.0, 1.0).value;
    double lo = 0.55, hi = 0.7;
    for (int iter = 0; iter < 60; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (mid * unit_dual < 1.0 ? lo : hi) = mid;
    }
    CHECK(0.5 * (lo + hi) == doctest::Approx(2 / M_PI).epsilon(1e-7));
}

TEST_SUITE_END();
