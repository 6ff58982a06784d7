#include "hardy/piext.hpp"

#include "hardy/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hardy {

namespace {
const Rational kZero{};
}

PiExt::PiExt(Rational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

PiExt PiExt::inv_pi_term(const Rational& coeff, std::size_t k) {
    PiExt r;
    if (coeff.is_zero()) return r;
    r.c_.resize(k + 1);
    r.c_[k] = coeff;
    return r;
}

const Rational& PiExt::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

void PiExt::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PiExt& PiExt::operator+=(const PiExt& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PiExt& PiExt::operator-=(const PiExt& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PiExt operator-(const PiExt& a) {
    PiExt r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

PiExt operator*(const PiExt& a, const PiExt& b) {
    PiExt r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.resize(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

double PiExt::to_double() const {
    double s = 0;
    const double inv_pi = 1.0 / M_PI;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        s = s * inv_pi + it->to_double();
    }
    return s;
}

std::string PiExt::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[k].str();
        if (k == 1) os << "/pi";
        if (k >= 2) os << "/pi^" << k;
        first = false;
    }
    return os.str();
}

PiExt piext_divide_exact(const PiExt& num, const PiExt& div) {
    if (div.is_zero()) throw std::domain_error("piext_divide_exact: zero divisor");
    PiExt quot;
    if (num.is_zero()) return quot;
    if (num.terms() < div.terms()) {
        throw InexactDivision("piext_divide_exact: quotient leaves Q[1/pi]");
    }

    // Long division in the variable u = 1/pi; exact iff the remainder is zero.
    std::vector<Rational> rem(num.terms());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = num.coeff(i);
    const std::size_t dd = div.terms() - 1;
    const Rational lead = div.coeff(dd);
    std::vector<Rational> q(rem.size() - dd);

    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i].is_zero()) continue;
        Rational c = rem[i] / lead;
        q[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[i - dd + j] -= c * div.coeff(j);
        }
    }
    for (const auto& c : rem) {
        if (!c.is_zero()) {
            throw InexactDivision("piext_divide_exact: quotient leaves Q[1/pi]");
        }
    }
    for (std::size_t i = 0; i < q.size(); ++i) quot += PiExt::inv_pi_term(q[i], i);
    return quot;
}

} // namespace hardy
