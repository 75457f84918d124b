#ifndef RCA_RATIONAL_HPP
#define RCA_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "rca/errors.hpp"

namespace rca::exact {

using Integer = mpz_class;

// Exact rational number.  Always stored in lowest terms with positive
// denominator; every operation keeps that canonical form.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // implicit: integer literals are rationals
    Rational(long num, long den);
    explicit Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);

    static Rational parse(const std::string& text);

    const Integer& num() const { return v_.get_num(); }
    const Integer& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    // Largest integer <= value.
    Integer floor() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "p/q", or just "p" for integers.
    std::string str() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// q - k*floor(q/k), the representative of q mod k in [0, k).  Defined for
// rational q and positive integer k.
Rational rho_mod(const Rational& q, long k);

} // namespace rca::exact

#endif
