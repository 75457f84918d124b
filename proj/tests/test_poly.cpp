#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rca/poly.hpp"

using namespace rca::poly;
using rca::exact::Cyclotomic;
using rca::exact::Rational;

namespace {

MultiPoly x(int nvars, int i, int order = 1) { return MultiPoly::variable(nvars, i, order); }

MultiPoly random_poly(std::mt19937_64& rng, int nvars, int max_deg, int max_terms,
                      int order = 1) {
    std::uniform_int_distribution<int> exp(0, max_deg);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    MultiPoly p(nvars, order);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m(nvars);
        int budget = max_deg;
        for (int i = 0; i < nvars; ++i) {
            m[i] = std::min(exp(rng), budget);
            budget -= m[i];
        }
        p.add_term(m, Cyclotomic(Rational(coeff(rng))).embedded(order));
    }
    return p;
}

} // namespace

TEST_CASE("grlex ordering and leading term") {
    MultiPoly p(2);
    p.add_term({1, 0}, Cyclotomic(1));
    p.add_term({0, 2}, Cyclotomic(1));
    p.add_term({1, 1}, Cyclotomic(1));
    auto [m, c] = p.leading_term();
    CHECK(m == Monomial{1, 1});
    CHECK(p.degree() == 2);
    CHECK(p.str() == "x1 x2 + x2^2 + x1");
}

TEST_CASE("zero coefficients are never stored") {
    MultiPoly p = x(2, 0) - x(2, 0);
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    MultiPoly q = x(2, 0) + x(2, 1);
    q -= x(2, 1);
    CHECK(q == x(2, 0));
}

TEST_CASE("cross arity and cross order operations are rejected") {
    CHECK_THROWS(x(2, 0) + x(3, 0));
    CHECK_THROWS_AS(x(2, 0, 3) + x(2, 0, 4), rca::OrderMismatchError);
}

TEST_CASE("apply_linear_map examples") {
    // transposition
    MultiPoly f = x(2, 0) - x(2, 1);
    Matrix swap = MonomialMap::transposition(2, 0, 1).to_matrix(1);
    CHECK(apply_linear_map(f, swap) == -f);

    // diagonal cyclotomic scaling: x1^2 -> zeta_3^2 x1^2
    MultiPoly g = x(3, 0, 3) * x(3, 0, 3);
    Matrix diag = Matrix::identity(3, 3);
    diag.at(0, 0) = Cyclotomic::root_of_unity(3, 1);
    CHECK(apply_linear_map(g, diag) ==
          g.scaled(Cyclotomic::root_of_unity(3, 2)));

    // 3-cycle fixes the Vandermonde of three variables (even permutation)
    MultiPoly v = vandermonde(3, {0, 1, 2});
    MonomialMap cyc{{1, 2, 0},
                    {Cyclotomic::one(1), Cyclotomic::one(1), Cyclotomic::one(1)}};
    CHECK(apply_monomial_map(v, cyc) == v);
}

TEST_CASE("apply_linear_map inverse round trip on general matrices") {
    std::mt19937_64 rng(7);
    Matrix M = Matrix::from_rationals({{Rational(1), Rational(2), Rational(0)},
                                       {Rational(0), Rational(1), Rational(-1)},
                                       {Rational(1), Rational(0), Rational(3)}});
    Matrix Minv = M.inverse();
    for (int iter = 0; iter < 10; ++iter) {
        MultiPoly f = random_poly(rng, 3, 4, 6);
        CHECK(apply_linear_map(apply_linear_map(f, M), Minv) == f);
    }
}

TEST_CASE("substitution composes like matrix products") {
    std::mt19937_64 rng(12);
    Matrix A = Matrix::from_rationals({{Rational(1), Rational(1), Rational(0)},
                                       {Rational(0), Rational(2), Rational(1)},
                                       {Rational(0), Rational(0), Rational(1)}});
    Matrix B = Matrix::from_rationals({{Rational(1), Rational(0), Rational(-1)},
                                       {Rational(1), Rational(1), Rational(0)},
                                       {Rational(0), Rational(3), Rational(1)}});
    for (int iter = 0; iter < 8; ++iter) {
        MultiPoly f = random_poly(rng, 3, 4, 6);
        // f(A(Bx)) computed either way
        CHECK(apply_linear_map(apply_linear_map(f, A), B) == apply_linear_map(f, A.mul(B)));
    }
}

TEST_CASE("divide_exact_by_linear examples") {
    // (x1^2 - x2^2) / (x1 - x2) = x1 + x2
    MultiPoly f = x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1);
    LinearForm l = LinearForm::from_rationals({Rational(1), Rational(-1)});
    CHECK(divide_exact_by_linear(f, l) == x(2, 0) + x(2, 1));

    // cyclotomic covector
    Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
    LinearForm lc{{Cyclotomic::one(3), -w, Cyclotomic::zero(3)}};
    MultiPoly g = lc.to_poly(3) * x(3, 2, 3);
    CHECK(divide_exact_by_linear(g, lc) == x(3, 2, 3));

    // x1 is not divisible by x2
    LinearForm x2only = LinearForm::from_rationals({Rational(0), Rational(1)});
    CHECK_THROWS_AS(divide_exact_by_linear(x(2, 0), x2only), rca::NotDivisibleError);
}

TEST_CASE("division property: (f*l)/l == f") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int iter = 0; iter < 60; ++iter) {
        int nvars = 2 + static_cast<int>(iter % 4);
        MultiPoly f = random_poly(rng, nvars, 5, 8);
        std::vector<Rational> cov(nvars);
        bool nonzero = false;
        for (auto& r : cov) {
            r = Rational(coeff(rng));
            nonzero = nonzero || !r.is_zero();
        }
        if (!nonzero) cov[0] = Rational(1);
        LinearForm l = LinearForm::from_rationals(cov);
        CHECK(divide_exact_by_linear(f * l.to_poly(1), l) == f);
    }
}

TEST_CASE("vandermonde") {
    CHECK(vandermonde(3, {0}) == MultiPoly::constant(3, Cyclotomic(1)));
    CHECK(vandermonde(2, {0, 1}) == x(2, 0) - x(2, 1));

    // Brute expansion of the product (frozen oracle): degree 3, 6 terms,
    // alternating signs.
    MultiPoly v = vandermonde(3, {0, 1, 2});
    MultiPoly expect = (x(3, 0) - x(3, 1)) * (x(3, 0) - x(3, 2)) * (x(3, 1) - x(3, 2));
    CHECK(v == expect);
    CHECK(v.degree() == 3);
    CHECK(v.term_count() == 6);

    CHECK_THROWS(vandermonde(3, {0, 0}));
}

TEST_CASE("vandermonde alternates under transpositions of listed indices") {
    MultiPoly v = vandermonde(4, {0, 2, 3});
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {2, 3}}) {
        Matrix swap = MonomialMap::transposition(4, i, j).to_matrix(1);
        CHECK(apply_linear_map(v, swap) == -v);
    }
}

TEST_CASE("partial derivative") {
    MultiPoly f = x(2, 0) * x(2, 0) * x(2, 1);
    CHECK(partial_derivative(f, 0) ==
          (x(2, 0) * x(2, 1)).scaled(Cyclotomic(2)));
    CHECK(partial_derivative(x(2, 0), 1).is_zero());
    CHECK(partial_derivative(vandermonde(2, {0, 1}), 0) ==
          MultiPoly::constant(2, Cyclotomic(1)));
}

namespace {

// Frame for the diagonal subspace x1 = x2 = x3 in adapted coordinates
// x1 = t, x2 = t + u1, x3 = t + u2.
AdaptedFrame diagonal_frame() {
    AdaptedFrame fr;
    fr.substitution = Matrix::from_rationals({{Rational(1), Rational(0), Rational(0)},
                                              {Rational(1), Rational(1), Rational(0)},
                                              {Rational(1), Rational(0), Rational(1)}});
    fr.is_normal = {0, 1, 1};
    return fr;
}

} // namespace

TEST_CASE("multiplicity along subspaces") {
    MultiPoly v = vandermonde(3, {0, 1, 2});
    CHECK(multiplicity_along(v, diagonal_frame()) == 3);

    // x1*x2 along x1 = x2 = 0: parametrize x1 = u1, x2 = u2, x3 = t.
    AdaptedFrame axis;
    axis.substitution = Matrix::identity(3, 1);
    axis.is_normal = {1, 1, 0};
    CHECK(multiplicity_along(x(3, 0) * x(3, 1), axis) == 2);

    // x1 + x2 does not vanish on x1 = x2.
    AdaptedFrame diag2;
    diag2.substitution = Matrix::from_rationals({{Rational(1), Rational(0)},
                                                 {Rational(1), Rational(1)}});
    diag2.is_normal = {0, 1};
    CHECK(multiplicity_along(x(2, 0) + x(2, 1), diag2) == 0);

    CHECK_THROWS(multiplicity_along(MultiPoly(3), diagonal_frame()));
}

TEST_CASE("multiplicity is invariant under tangential shears") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coeff(-3, 3);
    MultiPoly f = vandermonde(3, {0, 1, 2}) * x(3, 0) + x(3, 1) * x(3, 1) - x(3, 2) * x(3, 2);
    AdaptedFrame base = diagonal_frame();
    int m0 = multiplicity_along(f, base);
    for (int iter = 0; iter < 20; ++iter) {
        // y-side change of coordinates preserving {u = 0}: t' = t + a*u1 + b*u2,
        // u' = invertible upper-triangular mix of u.
        Matrix S = Matrix::identity(3, 1);
        S.at(0, 1) = Cyclotomic(Rational(coeff(rng)));
        S.at(0, 2) = Cyclotomic(Rational(coeff(rng)));
        S.at(1, 2) = Cyclotomic(Rational(coeff(rng)));
        AdaptedFrame sheared;
        sheared.substitution = base.substitution.mul(S);
        sheared.is_normal = base.is_normal;
        CHECK(multiplicity_along(f, sheared) == m0);
    }
}

TEST_CASE("polynomial text rendering") {
    MultiPoly f = x(3, 0) * x(3, 0) - x(3, 2).scaled(Cyclotomic(Rational(1, 2)));
    CHECK(f.str() == "x1^2 - 1/2*x3");
    Cyclotomic w = Cyclotomic::root_of_unity(4, 1);
    MultiPoly g = x(2, 1, 4).scaled(w);
    CHECK(g.str() == "(z)*x2");
}
