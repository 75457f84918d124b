#ifndef RCA_CYCLOTOMIC_HPP
#define RCA_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "rca/rational.hpp"

namespace rca::exact {

int euler_phi(int m);

// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic.
const std::vector<Integer>& cyclotomic_polynomial(int m);

// Exact element of the cyclotomic field Q(zeta_m), stored in the power basis
// 1, zeta, ..., zeta^{phi(m)-1} modulo the m-th cyclotomic polynomial.
// Orders 1 and 2 degenerate to plain rationals (phi = 1).
//
// Values are immutable after construction.  Arithmetic requires matching
// orders; use embedded() for an explicit change of order.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coords_(1) {}
    explicit Cyclotomic(const Rational& r) : order_(1), coords_{r} {}
    Cyclotomic(long n) : order_(1), coords_{Rational(n)} {} // NOLINT

    static Cyclotomic zero(int order);
    static Cyclotomic one(int order);
    // zeta_m^k reduced to the power basis; k may be negative.
    static Cyclotomic root_of_unity(int m, long k);
    static Cyclotomic from_coords(int order, std::vector<Rational> coords);

    int order() const { return order_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational as_rational() const; // requires is_rational()

    // Explicit embedding into Q(zeta_new).  Requires order() | new_order,
    // except that rational values embed into any order.
    Cyclotomic embedded(int new_order) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    Cyclotomic inverse() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Canonical rendering "a0 + a1*z + a2*z^2 + ..." with rationals as "p/q".
    std::string str() const;
    // Parses the same grammar back; the order is supplied by the caller.
    static Cyclotomic parse(const std::string& text, int order);

private:
    Cyclotomic(int order, std::vector<Rational> coords)
        : order_(order), coords_(std::move(coords)) {}

    void check_same_order(const Cyclotomic& o, const char* op) const;

    int order_;
    std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

} // namespace rca::exact

#endif
