#include "hardy/kernels.hpp"

#include <cmath>

namespace hardy::kernels::detail {

namespace {

// base^(twice/2) for twice >= 0: integer square-and-multiply plus one sqrt
// when twice is odd.
inline double pow_half_int(double base, int twice) {
    double r = 1.0;
    double acc = base;
    int m = twice >> 1;
    while (m != 0) {
        if (m & 1) r *= acc;
        m >>= 1;
        if (m != 0) acc *= acc;
    }
    if (twice & 1) r *= std::sqrt(base);
    return r;
}

} // namespace

double trapezoid_pow_sum_scalar(double x, double s, const double* ct, std::size_t n) {
    const double c0 = 1.0 + x * x;
    const double c1 = 2.0 * x;
    const double twice_d = 2.0 * s;
    const int twice = static_cast<int>(std::lround(twice_d));
    const bool half_int = std::fabs(twice_d - twice) < 1e-12 && twice >= 0 && twice <= 64;

    double a0 = 0, a1 = 0, a2 = 0, a3 = 0;
    std::size_t i = 0;
    if (half_int) {
        for (; i + 4 <= n; i += 4) {
            double b0 = c0 + c1 * ct[i];
            double b1 = c0 + c1 * ct[i + 1];
            double b2 = c0 + c1 * ct[i + 2];
            double b3 = c0 + c1 * ct[i + 3];
            if (b0 < 0) b0 = 0;
            if (b1 < 0) b1 = 0;
            if (b2 < 0) b2 = 0;
            if (b3 < 0) b3 = 0;
            a0 += pow_half_int(b0, twice);
            a1 += pow_half_int(b1, twice);
            a2 += pow_half_int(b2, twice);
            a3 += pow_half_int(b3, twice);
        }
        for (; i < n; ++i) {
            double b = c0 + c1 * ct[i];
            if (b < 0) b = 0;
            a0 += pow_half_int(b, twice);
        }
    } else {
        for (; i + 4 <= n; i += 4) {
            double b0 = c0 + c1 * ct[i];
            double b1 = c0 + c1 * ct[i + 1];
            double b2 = c0 + c1 * ct[i + 2];
            double b3 = c0 + c1 * ct[i + 3];
            a0 += std::pow(b0 < 0 ? 0 : b0, s);
            a1 += std::pow(b1 < 0 ? 0 : b1, s);
            a2 += std::pow(b2 < 0 ? 0 : b2, s);
            a3 += std::pow(b3 < 0 ? 0 : b3, s);
        }
        for (; i < n; ++i) {
            double b = c0 + c1 * ct[i];
            a0 += std::pow(b < 0 ? 0 : b, s);
        }
    }
    return (a0 + a1) + (a2 + a3);
}

double dot_powers_scalar(const double* c, std::size_t n, double u) {
    const double u2 = u * u;
    const double u3 = u2 * u;
    const double u4 = u2 * u2;
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    double p = 1.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += c[i] * p;
        s1 += c[i + 1] * (p * u);
        s2 += c[i + 2] * (p * u2);
        s3 += c[i + 3] * (p * u3);
        p *= u4;
    }
    double tail = 0;
    double pw = p;
    for (; i < n; ++i) {
        tail += c[i] * pw;
        pw *= u;
    }
    return ((s0 + s1) + (s2 + s3)) + tail;
}

} // namespace hardy::kernels::detail
