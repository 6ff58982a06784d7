#pragma once

#include <cstddef>

// Floating-point inner loops shared by the norm and dual-norm machinery.
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant; the active backend is chosen once at startup from CPUID.
// Set HARDY_SIMD=scalar to force the reference path.
namespace hardy::kernels {

// Name of the backend selected at startup: "avx2" or "scalar".
const char* active_backend();

// sum_{i<n} max(x^2 + 2x*cos_table[i] + 1, 0)^s.
//
// This is the trapezoidal sum for the circle integral of
// (1 + 2x cos(theta) + x^2)^s over one period. Half-integer exponents
// (2s integral, 0 <= 2s <= 64) take a sqrt/multiply fast path; other
// exponents always run the scalar pow loop.
double trapezoid_pow_sum(double x, double s, const double* cos_table, std::size_t n);

// sum_{k<n} c[k] * u^k with |u| <= 1, blocked into four interleaved lanes.
double dot_powers(const double* c, std::size_t n, double u);

namespace detail {

double trapezoid_pow_sum_scalar(double x, double s, const double* cos_table, std::size_t n);
double dot_powers_scalar(const double* c, std::size_t n, double u);

// True when the AVX2 variants were compiled in and the CPU supports them.
bool have_avx2();
double trapezoid_pow_sum_avx2(double x, double s, const double* cos_table, std::size_t n);
double dot_powers_avx2(const double* c, std::size_t n, double u);

} // namespace detail

} // namespace hardy::kernels
