#include "hardy/trigpoly.hpp"

#include <sstream>

namespace hardy {

TrigPoly TrigPoly::monomial(int a1, int a2, CRational c) {
    TrigPoly t;
    if (!c.is_zero()) t.c_.emplace(Index{a1, a2}, std::move(c));
    return t;
}

CRational TrigPoly::coeff(int a1, int a2) const {
    const auto it = c_.find({a1, a2});
    return it == c_.end() ? CRational{} : it->second;
}

void TrigPoly::add_term(const Index& k, const CRational& c) {
    auto [it, inserted] = c_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    for (const auto& [k, c] : o.c_) add_term(k, c);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
    for (const auto& [k, c] : o.c_) add_term(k, CRational{} - c);
    return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly r;
    for (const auto& [ka, ca] : a.c_) {
        for (const auto& [kb, cb] : b.c_) {
            r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        }
    }
    return r;
}

TrigPoly operator*(const CRational& c, const TrigPoly& p) {
    TrigPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : p.c_) r.c_.emplace(k, c * v);
    return r;
}

TrigPoly TrigPoly::conjugate() const {
    TrigPoly r;
    for (const auto& [k, c] : c_) {
        r.c_.emplace(Index{-k.first, -k.second}, c.conj());
    }
    return r;
}

Rational TrigPoly::h2_norm_sq() const {
    Rational s;
    for (const auto& [k, c] : c_) s += c.norm_sq();
    return s;
}

std::string TrigPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : c_) {
        if (!first) os << " + ";
        os << "(" << c.re.str();
        if (!c.im.is_zero()) os << (c.im.sign() > 0 ? "+" : "") << c.im.str() << "i";
        os << ")*z^(" << k.first << "," << k.second << ")";
        first = false;
    }
    return os.str();
}

TrigPoly riesz_project(const TrigPoly& t) {
    TrigPoly r;
    for (const auto& [k, c] : t.terms()) {
        if (k.first >= 0 && k.second >= 0) r += TrigPoly::monomial(k.first, k.second, c);
    }
    return r;
}

TrigPoly p1_project(const TrigPoly& t) {
    TrigPoly r;
    for (const auto& [k, c] : t.terms()) {
        if (k.first + k.second == 1) r += TrigPoly::monomial(k.first, k.second, c);
    }
    return r;
}

} // namespace hardy
