#pragma once

#include "hardy/rational.hpp"
#include "hardy/trigpoly.hpp"

#include <complex>
#include <cstddef>
#include <string>

namespace hardy {

// The linear form c1*z1 + c2*z2 on the torus T^2.
struct LinearForm {
    std::complex<double> c1;
    std::complex<double> c2;
};

// Canonical reduction phi = scale * (z1 + y*z2) up to torus rotations and a
// swap of the variables; 0 <= y <= 1 and scale = max(|c1|, |c2|).
struct CanonicalForm {
    double scale;
    double y;
};

// Throws std::invalid_argument when both coefficients vanish.
CanonicalForm canonicalize(const LinearForm& form);

enum class NormMethod { series, quadrature, closed_form };

const char* to_string(NormMethod m);

struct NormResult {
    double p;
    double value;
    NormMethod method;
    double error_bound;
};

// Series evaluation stalls near x = 1 for non-even p; hp_norm switches to
// quadrature above this point.
inline constexpr double kSeriesCutoff = 0.9;

// H^p norm of z1 + x*z2 via the squared-binomial power series
// sum_j C(p/2,j)^2 x^{2j}. Finite (hence exact) for even integer p;
// otherwise summed until the tail bound drops below tol. Converges for
// every 0 <= x <= 1 but needs many terms beyond kSeriesCutoff.
NormResult norm_series(double p, double x, double tol = 1e-10);

// Same norm via the trapezoidal rule on the periodic circle integral,
// doubling the node count from n until two successive values agree within
// tol. At x = 1 with p/2 non-integer the integrand loses smoothness and the
// exact central-binomial value is returned instead.
NormResult norm_quadrature(double p, double x, std::size_t n = 16, double tol = 1e-10);

// H^p(T^2) norm of a general linear form: canonical reduction, then the
// cheapest adequate method (exact finite series for even p, closed form for
// p = 4 and at y = 1, series below kSeriesCutoff, quadrature above it).
NormResult hp_norm(const LinearForm& form, double p, double tol = 1e-10);

// ||z1 + y*z2||^p for even p as an exact rational.
Rational even_norm_pow_p(const Rational& y, unsigned p);

// Low-level engine: sum_j C(p/2,j)^2 x^{2j} with guaranteed tail bound
// <= tol. Shared by norm_series and the dual-norm scans. Throws
// SlowConvergence if term_cap is exceeded.
double series_norm_pow_p(double p, double x, double tol,
                         double* tail_bound = nullptr,
                         std::size_t term_cap = 20'000'000);

// Low-level engine: plain trapezoid doubling for the circle integral of
// (1+2x cos t + x^2)^{p/2}, with no closed-form switch at x = 1.
double quadrature_norm_pow_p(double p, double x, std::size_t n0, double tol,
                             double* err = nullptr, std::size_t node_cap = (1u << 21));

// The four routes to the central value C(p,p/2): Gamma closed form, circle
// quadrature at x = 1, the squared-binomial series and its j-weighted
// variant scaled by 4/p. All four agree for every p >= 1.
struct CentralBinomialReport {
    double p;
    double gamma_value;
    double quadrature_value;
    double series_value;
    double weighted_series_value;
    double max_deviation;
};

CentralBinomialReport check_central_binomial(double p);

// Exact witness identity for the H^4 dual problem: with g = z1 + s*z2 and
// x = s^2, the Riesz projection of |g|^2 g equals (1+2x) z1 + s(2+x) z2.
// Checked with exact TrigPoly arithmetic; s must lie in [0, 1].
bool verify_witness_identity(const Rational& s);

} // namespace hardy
