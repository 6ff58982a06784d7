#pragma once

#include "hardy/rational.hpp"
#include "hardy/trigpoly.hpp"

#include <complex>
#include <cstddef>
#include <optional>

namespace hardy {

enum class Verdict {
    NOT_ADMISSIBLE,          // necessary condition (|a|+|b|)/2 <= 2/pi violated
    ADMISSIBLE_BY_SUFFICIENT, // quartic-mean condition holds
    ADMISSIBLE_BY_EXACT,      // dual norm <= 1, resolved numerically
    NOT_ADMISSIBLE_BY_EXACT,  // dual norm > 1, resolved numerically
    INDETERMINATE,            // bounds inconclusive (or exact value borderline)
};

const char* to_string(Verdict v);

struct Classification {
    Verdict verdict = Verdict::INDETERMINATE;
    // (|a|+|b|)/2 - 2/pi: positive means the necessary condition fails.
    double necessary_margin = 0;
    // ((|a|^4 + 4|ab|^2 + |b|^4)/6)^{1/4} - 2/pi: nonpositive means the
    // sufficient condition holds.
    double sufficient_margin = 0;
    std::optional<double> dual_norm;
    // Exact resolution landed within tolerance of the critical value 1;
    // the verdict is left INDETERMINATE rather than decided.
    bool borderline = false;
};

// Decides whether (alpha, beta) are the Wirtinger derivatives at 0 of some
// harmonic self-map of the disc fixing 0. Checks the necessary condition,
// then the sufficient condition; if both are inconclusive and resolve_exact
// is set, computes the (H^1)* dual norm of alpha z1 + beta z2 and compares
// it against 1 with the given tolerance.
Classification classify(std::complex<double> alpha, std::complex<double> beta,
                        bool resolve_exact, double tol = 1e-7);

// The extremal harmonic map f(z) = c * Arg((i - z)/(i + z)); maps the disc
// into itself exactly when |c| <= 2/pi, with d f(0) = dbar f(0) = c.
// Requires |z| < 1.
std::complex<double> extremal_map(std::complex<double> c, std::complex<double> z);

struct DiscScan {
    double max_abs;
    std::complex<double> argmax_z;
};

// Samples |extremal_map(c, .)| on a deterministic golden-spiral set of
// n points with |z| <= 0.999.
DiscScan extremal_map_disc_scan(std::complex<double> c, std::size_t n = 100'000);

// ||-eps z1 + (1 - eps^2) z2||_{H^p}, the norm of the Riesz projection of
// the unimodular counterexample psi = z2 (1 - eps z1 conj(z2))^2 /
// |1 - eps z1 conj(z2)|^2. Requires eps/(1-eps^2) < 1.
double counterexample_norm(double p, double eps);

// The counterexample symbol truncated after j = truncation:
// z2 * (-eps z1 conj(z2) + (1-eps^2) sum_{j<=truncation} eps^j (conj(z1) z2)^j),
// with exact rational coefficients. Its Riesz projection equals
// -eps z1 + (1-eps^2) z2 for any truncation >= 1.
TrigPoly counterexample_psi(const Rational& eps, unsigned truncation);

struct SharpnessResult {
    double eps;
    double norm;
};

// Scans eps in (0, 0.5] for counterexample_norm(p, eps) > 1 + 1e-6, which
// contradicts ||phi||_{(H^1)*} <= ||psi||_{L^inf} = 1. Succeeds for every
// p > 4 (the expansion has slope p/4 - 1 in eps^2); returns nullopt at
// p <= 4.
std::optional<SharpnessResult> sharpness_search(double p);

} // namespace hardy
