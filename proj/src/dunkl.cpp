#include "rca/dunkl.hpp"

#include <sstream>

#include "rca/errors.hpp"

namespace rca::dunkl {

using coxeter::Family;
using coxeter::GroupSpec;
using coxeter::RootDatum;
using exact::Cyclotomic;
using poly::LinearForm;
using poly::Monomial;
using poly::MonomialMap;

MultiplicityAssignment MultiplicityAssignment::parse(const std::string& text) {
    MultiplicityAssignment m;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            m.values.push_back(Rational::parse(cur));
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty()) m.values.push_back(Rational::parse(cur));
    if (m.values.empty()) throw std::invalid_argument("empty multiplicity assignment");
    return m;
}

std::string MultiplicityAssignment::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i].str();
    return os.str();
}

namespace {

int expected_orbit_count(const GroupSpec& spec) {
    switch (spec.family) {
        case Family::B: return 2;
        case Family::G: return spec.m / spec.p;
        default: return 1;
    }
}

void check_multiplicity(const GroupSpec& spec, const MultiplicityAssignment& mult) {
    int want = expected_orbit_count(spec);
    if (static_cast<int>(mult.values.size()) != want)
        throw std::invalid_argument("multiplicity assignment for " + spec.str() + " needs " +
                                    std::to_string(want) + " value(s)");
}

const Rational& root_weight(const GroupSpec& spec, const std::vector<Rational>& root,
                            const MultiplicityAssignment& mult) {
    if (spec.family != Family::B) return mult.values[0];
    int nonzero = 0;
    for (const auto& c : root)
        if (!c.is_zero()) ++nonzero;
    return nonzero == 1 ? mult.values[1] : mult.values[0];
}

} // namespace

MultiPoly dunkl_apply(const RootDatum& datum, const MultiplicityAssignment& mult,
                      const std::vector<Rational>& direction, const MultiPoly& f) {
    const GroupSpec& spec = datum.spec;
    if (!spec.is_real())
        throw std::invalid_argument("dunkl_apply needs a real reflection group");
    if (datum.positive_roots.empty())
        throw std::invalid_argument("dunkl_apply needs explicit roots for " + spec.str());
    check_multiplicity(spec, mult);
    const int N = f.nvars();
    if (datum.root_dim != N)
        throw std::invalid_argument("polynomial arity does not match the arrangement");
    if (static_cast<int>(direction.size()) != N)
        throw std::invalid_argument("direction dimension mismatch");

    MultiPoly result(N, f.coeff_order());
    for (int i = 0; i < N; ++i) {
        if (direction[i].is_zero()) continue;
        result += poly::partial_derivative(f, i)
                      .scaled(Cyclotomic(direction[i]).embedded(f.coeff_order()));
    }

    bool have_monomial_reflections =
        datum.reflections.size() == datum.positive_roots.size();
    for (size_t r = 0; r < datum.positive_roots.size(); ++r) {
        const auto& alpha = datum.positive_roots[r];
        Rational pairing(0);
        for (int i = 0; i < N; ++i) pairing += alpha[i] * direction[i];
        if (pairing.is_zero()) continue;

        MultiPoly reflected(N, f.coeff_order());
        if (have_monomial_reflections) {
            reflected = poly::apply_monomial_map(f, datum.reflections[r]);
        } else {
            // s_alpha = I - 2 alpha alpha^T / (alpha, alpha)
            Rational norm(0);
            for (const auto& a : alpha) norm += a * a;
            std::vector<std::vector<Rational>> rows(N, std::vector<Rational>(N));
            for (int i = 0; i < N; ++i) {
                rows[i][i] = Rational(1);
                for (int j = 0; j < N; ++j)
                    rows[i][j] -= Rational(2) * alpha[i] * alpha[j] / norm;
            }
            reflected = poly::apply_linear_map(
                f, poly::Matrix::from_rationals(rows, f.coeff_order()));
        }
        MultiPoly diff = f - reflected;
        if (diff.is_zero()) continue;
        MultiPoly quot =
            poly::divide_exact_by_linear(diff, LinearForm::from_rationals(alpha, f.coeff_order()));
        Rational w = root_weight(spec, alpha, mult) * pairing;
        result -= quot.scaled(Cyclotomic(w).embedded(f.coeff_order()));
    }
    return result;
}

MultiPoly dunkl_apply(const RootDatum& datum, const MultiplicityAssignment& mult, int direction,
                      const MultiPoly& f) {
    std::vector<Rational> xi(f.nvars());
    xi.at(direction) = Rational(1);
    return dunkl_apply(datum, mult, xi, f);
}

MultiPoly dunkl_opdam_apply(const GroupSpec& spec, const MultiplicityAssignment& mult,
                            int direction, const MultiPoly& f) {
    if (spec.family != Family::G)
        throw std::invalid_argument("dunkl_opdam_apply needs a G(m,p,N) spec");
    check_multiplicity(spec, mult);
    const int N = spec.rank;
    const int m = spec.m, p = spec.p;
    if (f.nvars() != N) throw std::invalid_argument("polynomial arity mismatch");
    if (direction < 0 || direction >= N) throw std::invalid_argument("direction out of range");

    const int order = m <= 2 ? 1 : m;
    if (f.coeff_order() != order && order % f.coeff_order() != 0)
        throw OrderMismatchError("polynomial coefficients do not embed into Q(zeta_m)");
    MultiPoly g = f.embedded(order);
    const int i = direction;

    MultiPoly result = poly::partial_derivative(g, i);
    Cyclotomic c1 = Cyclotomic(mult.values[0]).embedded(order);
    for (int j = 0; j < N; ++j) {
        if (j == i) continue;
        for (int k = 0; k < m; ++k) {
            MonomialMap s = MonomialMap::transposition(N, i, j, order);
            s.scale[i] = Cyclotomic::root_of_unity(m, k).embedded(order);
            s.scale[j] = Cyclotomic::root_of_unity(m, -k).embedded(order);
            MultiPoly diff = g - poly::apply_monomial_map(g, s);
            if (diff.is_zero()) continue;
            LinearForm l;
            l.covector.assign(N, Cyclotomic::zero(order));
            l.covector[i] = Cyclotomic::one(order);
            l.covector[j] = -Cyclotomic::root_of_unity(m, k).embedded(order);
            result -= poly::divide_exact_by_linear(diff, l).scaled(c1);
        }
    }

    const int mp = m / p;
    if (mp > 1) {
        LinearForm xi_only;
        xi_only.covector.assign(N, Cyclotomic::zero(order));
        xi_only.covector[i] = Cyclotomic::one(order);
        for (int t = 1; t < mp; ++t) {
            MultiPoly acc(N, order);
            for (int s = 0; s < mp; ++s) {
                MonomialMap tau = MonomialMap::identity(N, order);
                tau.scale[i] =
                    Cyclotomic::root_of_unity(m, static_cast<long>(p) * s).embedded(order);
                Cyclotomic weight =
                    Cyclotomic::root_of_unity(m, -static_cast<long>(p) * s * t).embedded(order);
                acc += poly::apply_monomial_map(g, tau).scaled(weight);
            }
            if (acc.is_zero()) continue;
            Cyclotomic ct = Cyclotomic(mult.values[t]).embedded(order);
            result -= poly::divide_exact_by_linear(acc, xi_only).scaled(ct);
        }
    }
    return result;
}

std::string SingularReport::describe() const {
    if (singular) return "singular: all Dunkl operators vanish";
    std::ostringstream os;
    os << "not singular: direction e" << (direction + 1) << " leaves residual with leading term ";
    auto [mono, coeff] = residual.leading_term();
    os << "(" << coeff.str() << ")*[";
    for (size_t v = 0; v < mono.size(); ++v) {
        if (mono[v] == 0) continue;
        os << " x" << (v + 1);
        if (mono[v] > 1) os << "^" << mono[v];
    }
    os << " ]";
    return os.str();
}

SingularReport is_singular(const GroupSpec& spec, const MultiplicityAssignment& mult,
                           const MultiPoly& f) {
    SingularReport report;
    const int N = f.nvars();
    if (spec.family == Family::G) {
        for (int i = 0; i < N; ++i) {
            MultiPoly img = dunkl_opdam_apply(spec, mult, i, f);
            if (!img.is_zero()) {
                report.direction = i;
                report.residual = img;
                return report;
            }
        }
    } else {
        RootDatum datum = coxeter::build_root_datum(spec);
        for (int i = 0; i < N; ++i) {
            MultiPoly img = dunkl_apply(datum, mult, i, f);
            if (!img.is_zero()) {
                report.direction = i;
                report.residual = img;
                return report;
            }
        }
    }
    report.singular = true;
    return report;
}

bool verify_lemalt(int n, int m, int k, LemaltVariant variant) {
    if (n < 1 || m < 1) throw std::invalid_argument("verify_lemalt needs n, m >= 1");
    // The plain product variant needs a primitive root of order at least 2:
    // at m = 1 its left side picks up divided differences of the bare x_j
    // factors (e.g. n = 1, k = 0 gives L(x_2) = -1, not 0).
    if (variant == LemaltVariant::V2 && m < 2)
        throw std::invalid_argument("the product identity needs m >= 2");
    int kmax = (variant == LemaltVariant::V1Prime) ? n - 1 : n;
    if (k < 0 || k > kmax) throw std::invalid_argument("k outside the admissible range");

    const int N = n + 1;
    const int order = m <= 2 ? 1 : m;
    std::vector<int> tail_vars(n);
    for (int j = 0; j < n; ++j) tail_vars[j] = j + 1;
    MultiPoly delta = poly::vandermonde(N, tail_vars, order, m);

    bool primed = variant == LemaltVariant::V1Prime || variant == LemaltVariant::V2Prime;
    bool with_product = variant == LemaltVariant::V2 || variant == LemaltVariant::V2Prime;

    Monomial head(N, 0);
    head[0] = m * k + (primed ? 1 : 0);
    MultiPoly P = MultiPoly::term(head, Cyclotomic::one(order)) * delta;
    if (with_product)
        for (int j = 1; j < N; ++j) P = P * poly::MultiPoly::variable(N, j, order);

    // L(P)
    MultiPoly lhs(N, order);
    for (int j = 1; j < N; ++j) {
        for (int kk = 0; kk < m; ++kk) {
            MonomialMap s = MonomialMap::transposition(N, 0, j, order);
            s.scale[0] = Cyclotomic::root_of_unity(m, kk).embedded(order);
            s.scale[j] = Cyclotomic::root_of_unity(m, -kk).embedded(order);
            MultiPoly diff = P - poly::apply_monomial_map(P, s);
            if (diff.is_zero()) continue;
            LinearForm l;
            l.covector.assign(N, Cyclotomic::zero(order));
            l.covector[0] = Cyclotomic::one(order);
            l.covector[j] = -Cyclotomic::root_of_unity(m, kk).embedded(order);
            lhs += poly::divide_exact_by_linear(diff, l);
        }
    }

    MultiPoly rhs = poly::partial_derivative(P, 0);
    if (primed) {
        LinearForm x1;
        x1.covector.assign(N, Cyclotomic::zero(order));
        x1.covector[0] = Cyclotomic::one(order);
        MultiPoly P_over_x1 = poly::divide_exact_by_linear(P, x1);
        if (variant == LemaltVariant::V1Prime)
            rhs += P_over_x1.scaled(Cyclotomic(Rational(m - 1)).embedded(order));
        else
            rhs -= P_over_x1;
    }
    return lhs == rhs;
}

MultiPoly commutator_residual(const GroupSpec& spec, const MultiplicityAssignment& mult,
                              int dir_a, int dir_b, const MultiPoly& f) {
    if (spec.family == Family::G) {
        MultiPoly ab = dunkl_opdam_apply(spec, mult, dir_a, dunkl_opdam_apply(spec, mult, dir_b, f));
        MultiPoly ba = dunkl_opdam_apply(spec, mult, dir_b, dunkl_opdam_apply(spec, mult, dir_a, f));
        return ab - ba;
    }
    RootDatum datum = coxeter::build_root_datum(spec);
    MultiPoly ab = dunkl_apply(datum, mult, dir_a, dunkl_apply(datum, mult, dir_b, f));
    MultiPoly ba = dunkl_apply(datum, mult, dir_b, dunkl_apply(datum, mult, dir_a, f));
    return ab - ba;
}

} // namespace rca::dunkl
