#pragma once

#include "hardy/rational.hpp"

namespace hardy {

// Generalized binomial coefficient C(a, j) = a(a-1)...(a-j+1)/j!.
Rational binom_general(const Rational& a, unsigned j);
double binom_general(double a, unsigned j);

// Central coefficient C(p, p/2) = Gamma(p+1)/Gamma(p/2+1)^2 for real p >= 0.
// Equals the classical central binomial coefficient at even integers and
// 4/pi at p = 1.
double central_binomial(double p);

} // namespace hardy
