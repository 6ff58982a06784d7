#pragma once

#include "hardy/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hardy {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline char to_char(Sign s) {
    return s == Sign::positive ? '+' : s == Sign::negative ? '-' : '0';
}

// Dense univariate polynomial over Rational; coefficient i multiplies x^i.
// Trailing zero coefficients are trimmed, so degree() is the index of the
// last nonzero coefficient (-1 for the zero polynomial).
//
// Laurent expressions are handled at call sites by tracking a power shift
// next to a plain RatPoly; there is no dedicated Laurent type.
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RatPoly constant(const Rational& c) { return RatPoly{c}; }
    static RatPoly monomial(const Rational& c, std::size_t deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::span<const Rational> coeffs() const { return c_; }
    // Zero beyond the stored degree.
    const Rational& coeff(std::size_t i) const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { a += b; return a; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { a -= b; return a; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const Rational& c, RatPoly p);
    RatPoly pow(unsigned k) const;

    RatPoly derivative() const;
    Rational evaluate(const Rational& x) const;
    double evaluate_double(double x) const;

    // One entry per coefficient index 0..degree().
    std::vector<Sign> sign_pattern() const;

    bool operator==(const RatPoly&) const = default;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Exact division: returns q with num == q * div; throws NonzeroRemainder if
// the division leaves a remainder and std::domain_error if div is zero.
RatPoly poly_divide_exact(const RatPoly& num, const RatPoly& div);

} // namespace hardy
