#include "hardy/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace hardy::kernels {

namespace detail {

bool have_avx2() {
#if defined(HARDY_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

#if !defined(HARDY_HAVE_AVX2)
// Stubs so the symbols exist on targets without the AVX2 translation unit;
// never reached because have_avx2() is false there.
double trapezoid_pow_sum_avx2(double x, double s, const double* ct, std::size_t n) {
    return trapezoid_pow_sum_scalar(x, s, ct, n);
}
double dot_powers_avx2(const double* c, std::size_t n, double u) {
    return dot_powers_scalar(c, n, u);
}
#endif

} // namespace detail

namespace {

struct Backend {
    const char* name;
    double (*trapezoid)(double, double, const double*, std::size_t);
    double (*dot)(const double*, std::size_t, double);
};

Backend pick_backend() {
    const char* env = std::getenv("HARDY_SIMD");
    const bool force_scalar = env != nullptr && std::strcmp(env, "scalar") == 0;
    if (!force_scalar && detail::have_avx2()) {
        return {"avx2", detail::trapezoid_pow_sum_avx2, detail::dot_powers_avx2};
    }
    return {"scalar", detail::trapezoid_pow_sum_scalar, detail::dot_powers_scalar};
}

const Backend& backend() {
    static const Backend b = pick_backend();
    return b;
}

inline bool half_integer_exponent(double s) {
    const double t = 2.0 * s;
    const long r = std::lround(t);
    return std::fabs(t - r) < 1e-12 && r >= 0 && r <= 64;
}

} // namespace

const char* active_backend() {
    return backend().name;
}

double trapezoid_pow_sum(double x, double s, const double* cos_table, std::size_t n) {
    // general exponents need pow(); only the scalar path provides it
    if (!half_integer_exponent(s)) {
        return detail::trapezoid_pow_sum_scalar(x, s, cos_table, n);
    }
    return backend().trapezoid(x, s, cos_table, n);
}

double dot_powers(const double* c, std::size_t n, double u) {
    return backend().dot(c, n, u);
}

} // namespace hardy::kernels
