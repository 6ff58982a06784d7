#pragma once

#include "hardy/ratpoly.hpp"

#include <cstddef>

namespace hardy {

// Result of a dual-norm computation for phi_y = z1 + y*z2. The extremal
// witness is g = z1 + t*z2; for the H^4 closed form t = sqrt(x) with
// y = sqrt(x)(2+x)/(1+2x), for the numeric maximization t is the optimizer.
struct DualWitness {
    double y;
    double t;
    double value;
    double error_bound;

    double x() const { return t * t; }
};

// Inverts the strictly increasing map y(x) = sqrt(x)(2+x)/(1+2x) on [0,1]
// by bisection; the result satisfies |y(x) - y| < tol.
double x_from_y(double y, double tol = 1e-13);

// Closed-form dual norm ||phi_y||_{(H^4)*} = (1+4x+x^2)^{3/4}/(1+2x) with
// x = x_from_y(y). Both printed forms of the closed expression are evaluated
// and must agree within 1e-12.
DualWitness h4_dual_norm(double y);

// Numeric dual norm ||phi_y||_{(H^q)*} for 1 <= q <= 2: maximizes
// (1 + y t) / ||z1 + t z2||_{H^q} over t >= 0 with a grid scan on [0, 4]
// followed by golden-section refinement. The objective tends to y <= 1 as
// t -> infinity, so the scan window cannot miss the supremum.
DualWitness hq_dual_norm(double q, double y, double tol = 1e-8);

// ||phi_y||_{(H^1)*} / ||phi_y||_{H^4}.
double ratio_curve(double y);

struct MonotoneReport {
    bool increasing;
    double worst_drop; // most negative successive difference observed
    double worst_y;    // grid point where it occurred
};

// Checks that numerator(y) / ||phi_y||_{H^1} is nondecreasing on a grid of
// the given size, uniform in y^2 so the points concentrate towards y = 1
// where a barely-failing ratio drops on a very narrow window. Successive
// differences down to -tol are tolerated.
MonotoneReport monotone_numerator_check(const RatPoly& numerator, int grid, double tol = 2e-9);

// Same check with numerator 1 + y^2/4 + y^4/64 + y^6/256 + c*y^8.
MonotoneReport monotone_F_check(const Rational& c, int grid, double tol = 2e-9);

} // namespace hardy
