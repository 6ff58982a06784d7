// AVX2 + FMA variants of the floating-point kernels. Compiled with
// -mavx2 -mfma in its own translation unit and only ever called after a
// CPUID check, so the rest of the library stays baseline.

#include "hardy/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace hardy::kernels::detail {

namespace {

inline __m256d pow_half_int(__m256d base, int twice) {
    __m256d r = _mm256_set1_pd(1.0);
    __m256d acc = base;
    int m = twice >> 1;
    while (m != 0) {
        if (m & 1) r = _mm256_mul_pd(r, acc);
        m >>= 1;
        if (m != 0) acc = _mm256_mul_pd(acc, acc);
    }
    if (twice & 1) r = _mm256_mul_pd(r, _mm256_sqrt_pd(base));
    return r;
}

inline double reduce_lanes(__m256d v) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, v);
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

} // namespace

double trapezoid_pow_sum_avx2(double x, double s, const double* ct, std::size_t n) {
    const double c0 = 1.0 + x * x;
    const double c1 = 2.0 * x;
    const int twice = static_cast<int>(std::lround(2.0 * s));
    // wrapper guarantees a half-integer exponent on this path

    const __m256d vc0 = _mm256_set1_pd(c0);
    const __m256d vc1 = _mm256_set1_pd(c1);
    const __m256d vzero = _mm256_setzero_pd();
    __m256d acc = _mm256_setzero_pd();

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d base = _mm256_fmadd_pd(vc1, _mm256_loadu_pd(ct + i), vc0);
        base = _mm256_max_pd(base, vzero);
        acc = _mm256_add_pd(acc, pow_half_int(base, twice));
    }
    double sum = reduce_lanes(acc);
    for (; i < n; ++i) {
        double b = c0 + c1 * ct[i];
        if (b < 0) b = 0;
        double r = 1.0, a = b;
        int m = twice >> 1;
        while (m != 0) {
            if (m & 1) r *= a;
            m >>= 1;
            if (m != 0) a *= a;
        }
        if (twice & 1) r *= std::sqrt(b);
        sum += r;
    }
    return sum;
}

double dot_powers_avx2(const double* c, std::size_t n, double u) {
    const double u2 = u * u;
    const double u3 = u2 * u;
    const double u4 = u2 * u2;
    // lane l of pw holds u^{4k+l}
    __m256d pw = _mm256_setr_pd(1.0, u, u2, u3);
    const __m256d vu4 = _mm256_set1_pd(u4);
    __m256d acc = _mm256_setzero_pd();

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(c + i), pw, acc);
        pw = _mm256_mul_pd(pw, vu4);
    }
    double sum = reduce_lanes(acc);
    alignas(32) double lane[4];
    _mm256_store_pd(lane, pw);
    double p = lane[0];
    for (; i < n; ++i) {
        sum += c[i] * p;
        p *= u;
    }
    return sum;
}

} // namespace hardy::kernels::detail
