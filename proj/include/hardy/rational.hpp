#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

namespace hardy {

// Arbitrary-precision rational number with value semantics.
//
// Invariants: always reduced to lowest terms, denominator strictly positive,
// zero is represented as 0/1. Values are immutable in spirit (all operations
// return fresh objects), so they are safe to share between threads.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT: integers embed implicitly
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& n) : q_(n) {}

    // Accepts "num/den" or a plain integer, with optional sign.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const;
    Rational reciprocal() const;
    Rational pow(long e) const; // negative exponents require a nonzero base

    double to_double() const { return q_.get_d(); }
    // "num/den", or just "num" for integers.
    std::string str() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class q_; // always canonical
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace hardy
