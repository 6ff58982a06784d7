#include "hardy/ratpoly.hpp"

#include "hardy/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace hardy {

namespace {
const Rational kZero{};
}

RatPoly RatPoly::monomial(const Rational& c, std::size_t deg) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(deg + 1);
    v[deg] = c;
    return RatPoly(std::move(v));
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& RatPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return RatPoly(std::move(r));
}

RatPoly operator*(const Rational& c, RatPoly p) {
    if (c.is_zero()) return {};
    for (auto& x : p.c_) x *= c;
    return p;
}

RatPoly RatPoly::pow(unsigned k) const {
    RatPoly result{Rational(1)};
    RatPoly base = *this;
    while (k != 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k != 0) base = base * base;
    }
    return result;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        r[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    }
    return RatPoly(std::move(r));
}

Rational RatPoly::evaluate(const Rational& x) const {
    Rational s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        s = s * x + *it;
    }
    return s;
}

double RatPoly::evaluate_double(double x) const {
    double s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        s = s * x + it->to_double();
    }
    return s;
}

std::vector<Sign> RatPoly::sign_pattern() const {
    std::vector<Sign> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        r[i] = static_cast<Sign>(c_[i].sign());
    }
    return r;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].str();
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

RatPoly poly_divide_exact(const RatPoly& num, const RatPoly& div) {
    if (div.is_zero()) throw std::domain_error("poly_divide_exact: zero divisor");
    if (num.is_zero()) return {};
    if (num.degree() < div.degree()) {
        throw NonzeroRemainder("poly_divide_exact: divisor degree exceeds numerator degree");
    }

    std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
    const auto dd = static_cast<std::size_t>(div.degree());
    const Rational& lead = div.coeff(dd);
    std::vector<Rational> quot(rem.size() - dd);

    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i].is_zero()) continue;
        Rational q = rem[i] / lead;
        quot[i - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[i - dd + j] -= q * div.coeff(j);
        }
    }
    for (const auto& c : rem) {
        if (!c.is_zero()) {
            throw NonzeroRemainder("poly_divide_exact: division leaves a remainder");
        }
    }
    return RatPoly(std::move(quot));
}

} // namespace hardy
