#include "hardy/dual.hpp"

#include "hardy/norms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace hardy {

namespace {

constexpr double kScanMax = 4.0;
constexpr int kScanPoints = 4096;
constexpr double kInnerTol = 1e-11;  // tail bound for H^q norm evaluations
constexpr double kBracketWidth = 1e-6;

double y_of_x(double x) {
    return std::sqrt(x) * (2 + x) / (1 + 2 * x);
}

// ||z1 + t z2||_{H^q} for any t >= 0; reduces t > 1 by symmetry.
double nq_norm(double q, double t, double tol) {
    if (t <= 1.0) {
        return std::pow(series_norm_pow_p(q, t, tol), 1.0 / q);
    }
    return t * std::pow(series_norm_pow_p(q, 1.0 / t, tol), 1.0 / q);
}

// Cached H^q norms on the fixed scan grid t_i = kScanMax * i/(kScanPoints-1);
// the grid does not depend on y, so one table serves every dual query at
// this q.
std::uint64_t key_bits(double v) {
    std::uint64_t k;
    std::memcpy(&k, &v, sizeof(k));
    return k;
}

std::mutex g_scan_mu;
std::map<std::uint64_t, std::shared_ptr<const std::vector<double>>> g_scan_tabs;

std::shared_ptr<const std::vector<double>> scan_norms(double q) {
    {
        std::lock_guard lock(g_scan_mu);
        auto it = g_scan_tabs.find(key_bits(q));
        if (it != g_scan_tabs.end()) return it->second;
    }
    auto tab = std::make_shared<std::vector<double>>(kScanPoints);
    for (int i = 0; i < kScanPoints; ++i) {
        const double t = kScanMax * i / (kScanPoints - 1);
        (*tab)[i] = nq_norm(q, t, kInnerTol);
    }
    std::lock_guard lock(g_scan_mu);
    return g_scan_tabs.try_emplace(key_bits(q), std::move(tab)).first->second;
}

} // namespace

double x_from_y(double y, double tol) {
    if (!(y >= 0 && y <= 1)) throw std::invalid_argument("x_from_y: requires 0 <= y <= 1");
    if (y == 0) return 0;
    if (y == 1) return 1;
    double lo = 0, hi = 1;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double val = y_of_x(mid);
        if (std::fabs(val - y) < tol) return mid;
        (val < y ? lo : hi) = mid;
        if (hi - lo < 1e-17) break;
    }
    return 0.5 * (lo + hi);
}

DualWitness h4_dual_norm(double y) {
    const double x = x_from_y(y, 1e-14);
    const double base = 1 + 4 * x + x * x;
    const double via_witness = (1 + std::sqrt(x) * y) / std::pow(base, 0.25);
    const double closed = std::pow(base, 0.75) / (1 + 2 * x);
    if (std::fabs(via_witness - closed) > 1e-12) {
        throw std::logic_error("h4_dual_norm: closed-form expressions disagree");
    }
    return {y, std::sqrt(x), closed, std::fabs(via_witness - closed) + 4e-16 * closed};
}

DualWitness hq_dual_norm(double q, double y, double tol) {
    if (!(q >= 1 && q <= 2)) throw std::invalid_argument("hq_dual_norm: requires 1 <= q <= 2");
    if (!(y >= 0 && y <= 1)) throw std::invalid_argument("hq_dual_norm: requires 0 <= y <= 1");
    // the scan table is always built at kInnerTol; tighter requests only
    // sharpen the refinement evaluations. A bracket of width 1e-6 already
    // contributes O(1e-13) to the value through the quadratic maximum.
    const double inner_tol = std::clamp(tol / 100, 1e-13, kInnerTol);

    const auto norms = scan_norms(q);
    const double step = kScanMax / (kScanPoints - 1);

    int best_i = 0;
    double scan_best = 0;
    for (int i = 0; i < kScanPoints; ++i) {
        const double h = (1 + y * step * i) / (*norms)[i];
        if (h > scan_best) {
            scan_best = h;
            best_i = i;
        }
    }
    double best_t = step * best_i;

    // golden-section refinement inside the bracketing grid cells; the scan
    // located the bracket, the refinement re-evaluates at inner_tol
    const auto objective = [&](double t) { return (1 + y * t) / nq_norm(q, t, inner_tol); };
    double best = objective(best_t);
    double lo = std::max(0.0, best_t - step);
    double hi = std::min(kScanMax, best_t + step);
    const double gr = (std::sqrt(5.0) - 1) / 2;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = objective(c);
    double fd = objective(d);
    while (hi - lo > kBracketWidth) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = objective(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = objective(d);
        }
        if (fc > best) { best = fc; best_t = c; }
        if (fd > best) { best = fd; best_t = d; }
    }

    // value error: inner norm tolerance plus the residual refinement gap
    const double err = 4 * inner_tol * best + std::max(0.0, best - std::min(fc, fd));
    return {y, best_t, best, err};
}

double ratio_curve(double y) {
    const double dual = hq_dual_norm(1.0, y, 1e-10).value;
    const double h4 = hp_norm({1.0, y}, 4.0).value;
    return dual / h4;
}

MonotoneReport monotone_numerator_check(const RatPoly& numerator, int grid, double tol) {
    if (grid < 100) throw std::invalid_argument("monotone_numerator_check: need grid >= 100");
    MonotoneReport rep{true, 0.0, 0.0};
    double prev = 0;
    for (int i = 0; i < grid; ++i) {
        // uniform in y^2: a monotone reparametrization, so monotonicity is
        // unchanged, but the grid concentrates near y = 1 where a failing
        // ratio drops on a window narrower than 1/grid
        const double y = std::sqrt(static_cast<double>(i) / (grid - 1));
        // p = 1: the series sum is the norm itself
        const double n1 = series_norm_pow_p(1.0, y, 1e-13);
        const double ratio = numerator.evaluate_double(y) / n1;
        if (i > 0) {
            const double diff = ratio - prev;
            if (diff < rep.worst_drop) {
                rep.worst_drop = diff;
                rep.worst_y = y;
            }
            if (diff < -tol) rep.increasing = false;
        }
        prev = ratio;
    }
    return rep;
}

MonotoneReport monotone_F_check(const Rational& c, int grid, double tol) {
    const RatPoly numerator{
        Rational(1),   Rational(0), Rational(1, 4), Rational(0), Rational(1, 64),
        Rational(0),   Rational(1, 256), Rational(0), c};
    return monotone_numerator_check(numerator, grid, tol);
}

} // namespace hardy
