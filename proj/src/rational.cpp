#include "rca/rational.hpp"

#include <ostream>

namespace rca::exact {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r;
            r.v_ = mpq_class(Integer(text));
            return r;
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse rational from '" + text + "'");
    }
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational rho_mod(const Rational& q, long k) {
    if (k <= 0) throw std::invalid_argument("rho_mod needs k > 0");
    Rational scaled = q / Rational(k);
    return q - Rational(scaled.floor()) * Rational(k);
}

} // namespace rca::exact
