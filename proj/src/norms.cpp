#include "hardy/norms.hpp"

#include "hardy/binomial.hpp"
#include "hardy/errors.hpp"
#include "hardy/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace hardy {

namespace {

constexpr std::size_t kBlock = 256;

bool is_even_integer(double p) {
    const long r = std::lround(p);
    return std::fabs(p - r) < 1e-9 && r % 2 == 0;
}

std::uint64_t key_bits(double v) {
    std::uint64_t k;
    static_assert(sizeof(k) == sizeof(v));
    std::memcpy(&k, &v, sizeof(k));
    return k;
}

// --- cached tables of C(a,j)^2 -------------------------------------------
//
// Tables are published as immutable shared_ptr snapshots; growing a table
// builds a longer copy, so readers keep a stable view without holding the
// lock during summation.

struct CoeffEntry {
    std::shared_ptr<const std::vector<double>> squares;
    double next_c = 1.0;  // C(a, n) where n = squares->size()
};

std::mutex g_coeff_mu;
std::map<std::uint64_t, CoeffEntry> g_coeff_tabs;

std::shared_ptr<const std::vector<double>> coeff_squares(double a, std::size_t need) {
    std::lock_guard lock(g_coeff_mu);
    auto& e = g_coeff_tabs[key_bits(a)];
    if (!e.squares) {
        e.squares = std::make_shared<std::vector<double>>();
        e.next_c = 1.0; // C(a, 0)
    }
    if (e.squares->size() < need) {
        auto grown = std::make_shared<std::vector<double>>(*e.squares);
        grown->reserve(need);
        double c = e.next_c;
        for (std::size_t j = grown->size(); j < need; ++j) {
            grown->push_back(c * c);
            c *= (a - static_cast<double>(j)) / (static_cast<double>(j) + 1.0);
        }
        e.next_c = c;
        e.squares = std::move(grown);
    }
    return e.squares;
}

// --- cached cosine tables --------------------------------------------------

std::mutex g_cos_mu;
std::map<std::size_t, std::shared_ptr<const std::vector<double>>> g_cos_tabs;

std::shared_ptr<const std::vector<double>> cos_table(std::size_t n) {
    {
        std::lock_guard lock(g_cos_mu);
        auto it = g_cos_tabs.find(n);
        if (it != g_cos_tabs.end()) return it->second;
    }
    auto tab = std::make_shared<std::vector<double>>(n);
    const double step = 2.0 * M_PI / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        (*tab)[i] = std::cos(step * static_cast<double>(i));
    }
    std::lock_guard lock(g_cos_mu);
    return g_cos_tabs.try_emplace(n, std::move(tab)).first->second;
}

} // namespace

const char* to_string(NormMethod m) {
    switch (m) {
        case NormMethod::series: return "series";
        case NormMethod::quadrature: return "quadrature";
        case NormMethod::closed_form: return "closed_form";
    }
    return "?";
}

CanonicalForm canonicalize(const LinearForm& form) {
    const double a = std::abs(form.c1);
    const double b = std::abs(form.c2);
    if (a == 0 && b == 0) {
        throw std::invalid_argument("canonicalize: zero linear form");
    }
    const double scale = std::max(a, b);
    return {scale, std::min(a, b) / scale};
}

double series_norm_pow_p(double p, double x, double tol, double* tail_bound,
                         std::size_t term_cap) {
    if (!(p >= 1)) throw std::invalid_argument("series_norm_pow_p: requires p >= 1");
    if (!(x >= 0 && x <= 1)) throw std::invalid_argument("series_norm_pow_p: requires 0 <= x <= 1");

    const double a = p / 2;
    const double u = x * x;
    const double u_block = std::pow(u, static_cast<double>(kBlock));

    auto tab = coeff_squares(a, kBlock + 1);
    double sum = 0;
    double pw = 1; // u^j at the start of each block
    std::size_t j = 0;
    for (;;) {
        if (tab->size() < j + kBlock + 1) {
            tab = coeff_squares(a, j + kBlock + 1);
        }
        sum += kernels::dot_powers(tab->data() + j, kBlock, u) * pw;
        j += kBlock;
        pw *= u_block;

        // Once j > a the term ratio ((j-a)/(j+1))^2 u is below u and the
        // terms decay at least like j^-(p+2), so the tail is at most
        // t_j * min(geometric, polynomial). Before that point no bound is
        // claimed and summation continues.
        const double t_next = (*tab)[j] * pw;
        double bound = std::numeric_limits<double>::infinity();
        if (t_next == 0) {
            bound = 0;
        } else if (static_cast<double>(j) > a) {
            if (u < 1) {
                bound = t_next / (1 - u);
            }
            const double poly = t_next * (1 + (static_cast<double>(j) + 2) / (p + 1));
            bound = std::min(bound, poly);
        }
        if (bound <= tol) {
            if (tail_bound) *tail_bound = bound;
            return sum;
        }
        if (j >= term_cap) {
            throw SlowConvergence("series_norm_pow_p: term cap exceeded");
        }
    }
}

double quadrature_norm_pow_p(double p, double x, std::size_t n0, double tol,
                             double* err, std::size_t node_cap) {
    const double s = p / 2;
    double prev = 0;
    bool have_prev = false;
    for (std::size_t n = std::max<std::size_t>(n0, 16); n <= node_cap; n *= 2) {
        const auto ct = cos_table(n);
        const double integral =
            kernels::trapezoid_pow_sum(x, s, ct->data(), n) / static_cast<double>(n);
        if (have_prev) {
            const double diff = std::fabs(integral - prev);
            if (diff <= tol * std::max(1.0, std::fabs(integral))) {
                if (err) *err = diff;
                return integral;
            }
        }
        prev = integral;
        have_prev = true;
    }
    throw NoConvergence("quadrature_norm_pow_p: node cap reached before tolerance");
}

NormResult norm_series(double p, double x, double tol) {
    double tail = 0;
    const double s = series_norm_pow_p(p, x, tol, &tail);
    const double value = std::pow(s, 1.0 / p);
    const double err = tail / (p * std::max(s, 1e-300)) * value + 1e-15 * value;
    return {p, value, NormMethod::series, err};
}

NormResult norm_quadrature(double p, double x, std::size_t n, double tol) {
    if (n < 16) throw std::invalid_argument("norm_quadrature: need n >= 16");
    if (!(p >= 1)) throw std::invalid_argument("norm_quadrature: requires p >= 1");
    if (!(x >= 0 && x <= 1)) throw std::invalid_argument("norm_quadrature: requires 0 <= x <= 1");

    const bool s_integral = std::fabs(p / 2 - std::lround(p / 2)) < 1e-12;
    if (x == 1.0 && !s_integral) {
        // kinked integrand: use the exact beta/central-binomial value
        const double value = std::pow(central_binomial(p), 1.0 / p);
        return {p, value, NormMethod::closed_form, 4e-15 * value};
    }
    double err = 0;
    const double integral = quadrature_norm_pow_p(p, x, n, tol, &err);
    const double value = std::pow(integral, 1.0 / p);
    return {p, value, NormMethod::quadrature,
            err / (p * std::max(integral, 1e-300)) * value + 1e-15 * value};
}

Rational even_norm_pow_p(const Rational& y, unsigned p) {
    if (p == 0 || p % 2 != 0) throw std::invalid_argument("even_norm_pow_p: p must be even");
    const Rational a(static_cast<long>(p / 2));
    const Rational y2 = y * y;
    Rational sum;
    Rational y_pow(1);
    for (unsigned j = 0; j <= p / 2; ++j) {
        const Rational c = binom_general(a, j);
        sum += c * c * y_pow;
        y_pow *= y2;
    }
    return sum;
}

NormResult hp_norm(const LinearForm& form, double p, double tol) {
    if (!(p >= 1)) throw std::invalid_argument("hp_norm: requires p >= 1");
    const auto [scale, y] = canonicalize(form);

    NormResult r{p, 0, NormMethod::series, 0};
    if (std::fabs(p - 4) < 1e-12) {
        const double y2 = y * y;
        r.value = std::pow(1 + 4 * y2 + y2 * y2, 0.25);
        r.method = NormMethod::closed_form;
        r.error_bound = 4e-16 * r.value;
    } else if (is_even_integer(p)) {
        r = norm_series(p, y, tol);
    } else if (y <= kSeriesCutoff) {
        r = norm_series(p, y, tol);
    } else if (y < 1 - 1e-12) {
        r = norm_quadrature(p, y, 16, tol);
    } else {
        const double value = std::pow(central_binomial(p), 1.0 / p);
        r = {p, value, NormMethod::closed_form, 4e-15 * value};
    }
    r.value *= scale;
    r.error_bound *= scale;
    return r;
}

CentralBinomialReport check_central_binomial(double p) {
    if (!(p >= 1)) throw std::invalid_argument("check_central_binomial: requires p >= 1");
    CentralBinomialReport rep{};
    rep.p = p;
    rep.gamma_value = central_binomial(p);
    // honest trapezoid at x = 1, no closed-form switch
    rep.quadrature_value = quadrature_norm_pow_p(p, 1.0, 64, 1e-10);
    rep.series_value = series_norm_pow_p(p, 1.0, 1e-10);

    // (4/p) * sum_j C(p/2,j)^2 j, Kahan-summed; terms decay like j^-(p+1)
    {
        const double a = p / 2;
        double sum = 0, comp = 0;
        double c = 1.0; // C(a, 0)
        double j = 0;
        for (;;) {
            const double term = c * c * j;
            const double yk = term - comp;
            const double tk = sum + yk;
            comp = (tk - sum) - yk;
            sum = tk;
            c *= (a - j) / (j + 1);
            j += 1;
            if (j > a + 1) {
                const double t_next = c * c * j;
                if (t_next == 0) break;
                // tail of sum_{i>=j} i^{-(p+1)}-type terms
                const double bound = 2 * t_next * (j + 2) / p;
                if (bound < 2.5e-9) break;
            }
            if (j > 1.2e8) throw SlowConvergence("check_central_binomial: weighted series cap");
        }
        rep.weighted_series_value = 4 / p * sum;
    }

    const double v[4] = {rep.gamma_value, rep.quadrature_value, rep.series_value,
                         rep.weighted_series_value};
    double dev = 0;
    for (int i = 0; i < 4; ++i) {
        for (int k = i + 1; k < 4; ++k) {
            dev = std::max(dev, std::fabs(v[i] - v[k]));
        }
    }
    rep.max_deviation = dev;
    return rep;
}

bool verify_witness_identity(const Rational& s) {
    if (s.sign() < 0 || s > Rational(1)) {
        throw std::invalid_argument("verify_witness_identity: s must lie in [0,1]");
    }
    const Rational x = s * s;
    const TrigPoly g = TrigPoly::z1() + TrigPoly::monomial(0, 1, CRational(s));
    const TrigPoly cube = g * g.conjugate() * g;
    const TrigPoly projected = riesz_project(cube);

    const Rational one(1), two(2);
    const TrigPoly expected = TrigPoly::monomial(1, 0, CRational(one + two * x)) +
                              TrigPoly::monomial(0, 1, CRational(s * (two + x)));
    return projected == expected;
}

} // namespace hardy
