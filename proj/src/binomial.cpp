#include "hardy/binomial.hpp"

#include <cmath>

namespace hardy {

Rational binom_general(const Rational& a, unsigned j) {
    Rational r(1);
    for (unsigned i = 0; i < j; ++i) {
        r *= (a - Rational(static_cast<long>(i)));
        r /= Rational(static_cast<long>(i) + 1);
    }
    return r;
}

double binom_general(double a, unsigned j) {
    double r = 1;
    for (unsigned i = 0; i < j; ++i) {
        r *= (a - i) / (i + 1.0);
    }
    return r;
}

double central_binomial(double p) {
    return std::exp(std::lgamma(p + 1) - 2 * std::lgamma(p / 2 + 1));
}

} // namespace hardy
