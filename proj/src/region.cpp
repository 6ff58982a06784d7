#include "hardy/region.hpp"

#include "hardy/dual.hpp"
#include "hardy/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace hardy {

namespace {

constexpr double kTwoOverPi = 2.0 / M_PI;

} // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::NOT_ADMISSIBLE: return "NOT_ADMISSIBLE";
        case Verdict::ADMISSIBLE_BY_SUFFICIENT: return "ADMISSIBLE_BY_SUFFICIENT";
        case Verdict::ADMISSIBLE_BY_EXACT: return "ADMISSIBLE_BY_EXACT";
        case Verdict::NOT_ADMISSIBLE_BY_EXACT: return "NOT_ADMISSIBLE_BY_EXACT";
        case Verdict::INDETERMINATE: return "INDETERMINATE";
    }
    return "?";
}

Classification classify(std::complex<double> alpha, std::complex<double> beta,
                        bool resolve_exact, double tol) {
    const double a = std::abs(alpha);
    const double b = std::abs(beta);

    Classification c;
    c.necessary_margin = (a + b) / 2 - kTwoOverPi;
    const double quartic = (a * a * a * a + 4 * a * a * b * b + b * b * b * b) / 6;
    c.sufficient_margin = std::pow(quartic, 0.25) - kTwoOverPi;

    if (a == 0 && b == 0) {
        // the zero map is harmonic and fixes the origin
        c.verdict = Verdict::ADMISSIBLE_BY_SUFFICIENT;
        return c;
    }
    if (c.necessary_margin > 0) {
        c.verdict = Verdict::NOT_ADMISSIBLE;
        return c;
    }
    if (c.sufficient_margin <= 0) {
        c.verdict = Verdict::ADMISSIBLE_BY_SUFFICIENT;
        return c;
    }
    if (!resolve_exact) {
        c.verdict = Verdict::INDETERMINATE;
        return c;
    }

    const double scale = std::max(a, b);
    const double y = std::min(a, b) / scale;
    const double dual = scale * hq_dual_norm(1.0, y, 1e-9).value;
    c.dual_norm = dual;
    if (std::fabs(dual - 1.0) < tol) {
        c.borderline = true;
        c.verdict = Verdict::INDETERMINATE;
    } else {
        c.verdict = dual <= 1.0 ? Verdict::ADMISSIBLE_BY_EXACT : Verdict::NOT_ADMISSIBLE_BY_EXACT;
    }
    return c;
}

std::complex<double> extremal_map(std::complex<double> c, std::complex<double> z) {
    if (std::abs(z) >= 1) throw std::invalid_argument("extremal_map: requires |z| < 1");
    const std::complex<double> i(0, 1);
    const double arg = std::arg((i - z) / (i + z));
    return c * arg;
}

DiscScan extremal_map_disc_scan(std::complex<double> c, std::size_t n) {
    // deterministic golden-angle spiral, radii up to 0.999
    constexpr double kGolden = 0.6180339887498949;
    DiscScan scan{0.0, {0.0, 0.0}};
    for (std::size_t k = 0; k < n; ++k) {
        const double r = 0.999 * std::sqrt((static_cast<double>(k) + 0.5) / static_cast<double>(n));
        const double phase = 2 * M_PI * std::fmod(static_cast<double>(k) * kGolden, 1.0);
        const std::complex<double> z = std::polar(r, phase);
        const double v = std::abs(extremal_map(c, z));
        if (v > scan.max_abs) {
            scan.max_abs = v;
            scan.argmax_z = z;
        }
    }
    return scan;
}

double counterexample_norm(double p, double eps) {
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("counterexample_norm: requires 0 < eps < 1");
    const double scale = 1 - eps * eps;
    if (eps / scale >= 1) {
        throw std::invalid_argument("counterexample_norm: requires eps/(1-eps^2) < 1");
    }
    return hp_norm({-eps, scale}, p, 1e-12).value;
}

TrigPoly counterexample_psi(const Rational& eps, unsigned truncation) {
    // z2 * (-eps z1 conj(z2) + (1-eps^2) sum_{j<=truncation} eps^j (conj(z1) z2)^j)
    const Rational one(1);
    const Rational head = one - eps * eps;

    TrigPoly psi = TrigPoly::monomial(1, 0, CRational(-eps));
    Rational eps_pow(1);
    for (unsigned j = 0; j <= truncation; ++j) {
        psi += TrigPoly::monomial(-static_cast<int>(j), static_cast<int>(j) + 1,
                                  CRational(head * eps_pow));
        eps_pow *= eps;
    }
    return psi;
}

std::optional<SharpnessResult> sharpness_search(double p) {
    std::optional<SharpnessResult> best;
    for (int i = 1; i <= 100; ++i) {
        const double eps = 0.005 * i;
        const double norm = counterexample_norm(p, eps);
        if (norm > 1 + 1e-6 && (!best || norm > best->norm)) {
            best = SharpnessResult{eps, norm};
        }
    }
    return best;
}

} // namespace hardy
