#pragma once

#include "hardy/rational.hpp"

#include <string>
#include <vector>

namespace hardy {

// Element of the ring Q[1/pi]: value = sum_k coeff(k) * pi^{-k}.
// Since pi is transcendental the representation is unique once trailing
// zeros are trimmed, and division is defined exactly when polynomial
// division in the variable u = 1/pi leaves no remainder.
class PiExt {
public:
    PiExt() = default;
    PiExt(Rational constant); // NOLINT: rationals embed implicitly
    PiExt(long n) : PiExt(Rational(n)) {}

    // coeff * pi^{-k}
    static PiExt inv_pi_term(const Rational& coeff, std::size_t k);

    // Number of stored coefficients (degree in 1/pi plus one); 0 for zero.
    std::size_t terms() const { return c_.size(); }
    const Rational& coeff(std::size_t k) const;
    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }
    // The pi-free part (coefficient of pi^0).
    Rational rational_part() const { return coeff(0); }

    PiExt& operator+=(const PiExt& o);
    PiExt& operator-=(const PiExt& o);
    friend PiExt operator+(PiExt a, const PiExt& b) { a += b; return a; }
    friend PiExt operator-(PiExt a, const PiExt& b) { a -= b; return a; }
    friend PiExt operator-(const PiExt& a);
    friend PiExt operator*(const PiExt& a, const PiExt& b);

    double to_double() const;
    std::string str() const;

    bool operator==(const PiExt&) const = default;

private:
    void trim();
    std::vector<Rational> c_; // c_[k] multiplies pi^{-k}
};

// Exact quotient in Q[1/pi]; throws InexactDivision when the quotient would
// leave the ring and std::domain_error when div is zero.
PiExt piext_divide_exact(const PiExt& num, const PiExt& div);

} // namespace hardy
