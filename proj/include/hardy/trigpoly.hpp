#pragma once

#include "hardy/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace hardy {

// Gaussian rational: complex number with exact rational real/imaginary parts.
struct CRational {
    Rational re;
    Rational im;

    CRational() = default;
    CRational(Rational r) : re(std::move(r)) {} // NOLINT
    CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    CRational conj() const { return {re, -im}; }
    Rational norm_sq() const { return re * re + im * im; }

    CRational& operator+=(const CRational& o) { re += o.re; im += o.im; return *this; }
    CRational& operator-=(const CRational& o) { re -= o.re; im -= o.im; return *this; }
    friend CRational operator+(CRational a, const CRational& b) { a += b; return a; }
    friend CRational operator-(CRational a, const CRational& b) { a -= b; return a; }
    friend CRational operator*(const CRational& a, const CRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    bool operator==(const CRational&) const = default;
};

// Trigonometric polynomial on the torus T^2: a finitely supported map from
// frequencies (a1, a2) in Z^2 to exact Gaussian-rational coefficients.
// The product convolves supports (frequencies add), which encodes
// z1 * conj(z1) = 1 on the torus automatically.
class TrigPoly {
public:
    using Index = std::pair<int, int>;

    TrigPoly() = default;

    static TrigPoly monomial(int a1, int a2, CRational c);
    static TrigPoly z1() { return monomial(1, 0, CRational(Rational(1))); }
    static TrigPoly z2() { return monomial(0, 1, CRational(Rational(1))); }

    const std::map<Index, CRational>& terms() const { return c_; }
    CRational coeff(int a1, int a2) const;
    std::size_t support_size() const { return c_.size(); }
    bool is_zero() const { return c_.empty(); }

    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { a += b; return a; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { a -= b; return a; }
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
    friend TrigPoly operator*(const CRational& c, const TrigPoly& p);

    // Pointwise complex conjugate as a function on T^2:
    // coefficient at alpha becomes conj(coefficient at -alpha).
    TrigPoly conjugate() const;

    // Parseval: sum of |coefficient|^2, exact.
    Rational h2_norm_sq() const;

    bool operator==(const TrigPoly&) const = default;

    std::string str() const;

private:
    void add_term(const Index& k, const CRational& c);
    std::map<Index, CRational> c_;
};

// Riesz projection: keep frequencies with a1 >= 0 and a2 >= 0.
TrigPoly riesz_project(const TrigPoly& t);

// Projection onto the line a1 + a2 = 1.
TrigPoly p1_project(const TrigPoly& t);

} // namespace hardy
