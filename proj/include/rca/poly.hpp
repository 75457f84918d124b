#ifndef RCA_POLY_HPP
#define RCA_POLY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rca/cyclotomic.hpp"

namespace rca::poly {

using exact::Cyclotomic;
using exact::Rational;

// Exponent vector of fixed length nvars.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

// Graded lexicographic order, ascending: compare total degree first, then
// exponents left to right.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over Q(zeta_m).  The variable count and the
// coefficient order are fixed per value; cross-arity or cross-order
// operations are rejected rather than coerced.  No stored coefficient is
// zero.  Immutable in spirit: all operations return new values.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Cyclotomic, GrlexLess>;

    explicit MultiPoly(int nvars, int coeff_order = 1);

    static MultiPoly constant(int nvars, const Cyclotomic& c);
    static MultiPoly constant(int nvars, const Rational& r, int coeff_order = 1);
    // The monomial c * prod x_i^{e_i}.
    static MultiPoly term(const Monomial& exponents, const Cyclotomic& c);
    // x_var (0-based).
    static MultiPoly variable(int nvars, int var, int coeff_order = 1);

    int nvars() const { return nvars_; }
    int coeff_order() const { return coeff_order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    // Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    // Leading term in graded lex (the maximal one).
    std::pair<Monomial, Cyclotomic> leading_term() const;
    Cyclotomic coefficient(const Monomial& m) const;

    MultiPoly embedded(int new_order) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Cyclotomic& c) const;
    MultiPoly pow(int e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Graded-lex rendering, leading term first: "c * x1^2 x3 + ...".
    std::string str() const;

    void add_term(const Monomial& m, const Cyclotomic& c); // used by builders

private:
    void check_compatible(const MultiPoly& o, const char* op) const;

    int nvars_;
    int coeff_order_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// Nonzero covector over the coefficient field: l(x) = sum covector[i] * x_i.
struct LinearForm {
    std::vector<Cyclotomic> covector;

    int nvars() const { return static_cast<int>(covector.size()); }
    bool is_zero() const;
    MultiPoly to_poly(int coeff_order) const;

    static LinearForm from_rationals(const std::vector<Rational>& v, int coeff_order = 1);
};

// Square matrix over the coefficient field, row-major.
struct Matrix {
    int n = 0;
    int coeff_order = 1;
    std::vector<Cyclotomic> a;

    static Matrix identity(int n, int coeff_order = 1);
    static Matrix from_rationals(const std::vector<std::vector<Rational>>& rows,
                                 int coeff_order = 1);
    Cyclotomic& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Cyclotomic& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    Matrix mul(const Matrix& o) const;
    // Gauss-Jordan inverse; throws DivisionByZeroError when singular.
    Matrix inverse() const;
};

// Generalized permutation map x_i -> scale[i] * x_{target[i]}.
struct MonomialMap {
    std::vector<int> target;
    std::vector<Cyclotomic> scale;

    int nvars() const { return static_cast<int>(target.size()); }
    static MonomialMap identity(int n, int coeff_order = 1);
    static MonomialMap transposition(int n, int i, int j, int coeff_order = 1);
    MonomialMap compose(const MonomialMap& inner) const;
    Matrix to_matrix(int coeff_order) const;
    int order() const; // smallest k >= 1 with map^k = id
};

// Substitution x_i <- sum_j M[i][j] * x_j.  Degree preserved for invertible M.
MultiPoly apply_linear_map(const MultiPoly& f, const Matrix& M);
MultiPoly apply_monomial_map(const MultiPoly& f, const MonomialMap& m);

// Exact division f = q * l; throws NotDivisibleError on nonzero remainder.
MultiPoly divide_exact_by_linear(const MultiPoly& f, const LinearForm& l);

// prod_{i<j} (x_{v_i}^power - x_{v_j}^power) over the listed 0-based variable
// indices; a single index gives 1.  Indices must be distinct.
MultiPoly vandermonde(int nvars, const std::vector<int>& vars, int coeff_order = 1,
                      int power = 1);

MultiPoly partial_derivative(const MultiPoly& f, int var);

// Adapted coordinates for a linear subspace: x = substitution * y, where the
// y-variables flagged in is_normal span the normal directions and the rest
// parametrize the subspace.
struct AdaptedFrame {
    Matrix substitution;
    std::vector<char> is_normal;
};

// Minimal total degree in the normal variables after rewriting f in the
// adapted coordinates.  Requires f != 0.
int multiplicity_along(const MultiPoly& f, const AdaptedFrame& frame);

} // namespace rca::poly

#endif
