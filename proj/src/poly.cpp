#include "rca/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rca/errors.hpp"

namespace rca::poly {

int total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

MultiPoly::MultiPoly(int nvars, int coeff_order)
    : nvars_(nvars), coeff_order_(coeff_order) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
    if (coeff_order < 1) throw std::invalid_argument("coefficient order must be positive");
}

MultiPoly MultiPoly::constant(int nvars, const Cyclotomic& c) {
    MultiPoly p(nvars, c.order());
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::constant(int nvars, const Rational& r, int coeff_order) {
    return constant(nvars, Cyclotomic(r).embedded(coeff_order));
}

MultiPoly MultiPoly::term(const Monomial& exponents, const Cyclotomic& c) {
    MultiPoly p(static_cast<int>(exponents.size()), c.order());
    p.add_term(exponents, c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var, int coeff_order) {
    if (var < 0 || var >= nvars) throw std::invalid_argument("variable index out of range");
    Monomial m(nvars, 0);
    m[var] = 1;
    return term(m, Cyclotomic::one(coeff_order));
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    return d == degree();
}

std::pair<Monomial, Cyclotomic> MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

Cyclotomic MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return Cyclotomic::zero(coeff_order_);
    return it->second;
}

MultiPoly MultiPoly::embedded(int new_order) const {
    if (new_order == coeff_order_) return *this;
    MultiPoly r(nvars_, new_order);
    for (const auto& [m, c] : terms_) r.add_term(m, c.embedded(new_order));
    return r;
}

void MultiPoly::add_term(const Monomial& m, const Cyclotomic& c) {
    if (static_cast<int>(m.size()) != nvars_)
        throw std::invalid_argument("monomial arity mismatch");
    if (c.order() != coeff_order_)
        throw OrderMismatchError("coefficient order mismatch in polynomial term");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& o, const char* op) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument(std::string(op) + " on polynomials with different arity");
    if (coeff_order_ != o.coeff_order_)
        throw OrderMismatchError(std::string(op) + " on polynomials with different coefficient orders");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_, coeff_order_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o, "addition");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o, "subtraction");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b, "multiplication");
    MultiPoly r(a.nvars_, a.coeff_order_);
    Monomial prod(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) prod[i] = ma[i] + mb[i];
            r.add_term(prod, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Cyclotomic& c) const {
    if (c.order() != coeff_order_)
        throw OrderMismatchError("scaling coefficient order mismatch");
    MultiPoly r(nvars_, coeff_order_);
    if (c.is_zero()) return r;
    for (const auto& [m, t] : terms_) r.terms_.emplace(m, t * c);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    MultiPoly r = constant(nvars_, Cyclotomic::one(coeff_order_));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.coeff_order_ == b.coeff_order_ && a.terms_ == b.terms_;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.str();
        bool negated = false;
        if (c.is_rational()) {
            Rational r = c.as_rational();
            if (r < Rational(0)) { negated = true; cs = (-r).str(); }
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        first = false;
        bool is_const = total_degree(m) == 0;
        bool unit_coeff = (cs == "1") && !is_const;
        if (!unit_coeff) {
            if (c.is_rational()) os << cs;
            else os << "(" << cs << ")";
            if (!is_const) os << "*";
        }
        bool first_var = true;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first_var) os << " ";
            os << "x" << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
            first_var = false;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
    return os << p.str();
}

bool LinearForm::is_zero() const {
    return std::all_of(covector.begin(), covector.end(),
                       [](const Cyclotomic& c) { return c.is_zero(); });
}

MultiPoly LinearForm::to_poly(int coeff_order) const {
    MultiPoly p(nvars(), coeff_order);
    for (int i = 0; i < nvars(); ++i) {
        if (covector[i].is_zero()) continue;
        Monomial m(nvars(), 0);
        m[i] = 1;
        p.add_term(m, covector[i].embedded(coeff_order));
    }
    return p;
}

LinearForm LinearForm::from_rationals(const std::vector<Rational>& v, int coeff_order) {
    LinearForm l;
    l.covector.reserve(v.size());
    for (const auto& r : v) l.covector.push_back(Cyclotomic(r).embedded(coeff_order));
    return l;
}

Matrix Matrix::identity(int n, int coeff_order) {
    Matrix m;
    m.n = n;
    m.coeff_order = coeff_order;
    m.a.assign(static_cast<size_t>(n) * n, Cyclotomic::zero(coeff_order));
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one(coeff_order);
    return m;
}

Matrix Matrix::from_rationals(const std::vector<std::vector<Rational>>& rows, int coeff_order) {
    Matrix m;
    m.n = static_cast<int>(rows.size());
    m.coeff_order = coeff_order;
    m.a.reserve(static_cast<size_t>(m.n) * m.n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m.n)
            throw std::invalid_argument("matrix rows must be square");
        for (const auto& r : row) m.a.push_back(Cyclotomic(r).embedded(coeff_order));
    }
    return m;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (n != o.n || coeff_order != o.coeff_order)
        throw std::invalid_argument("matrix product shape/order mismatch");
    Matrix r = identity(n, coeff_order);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Cyclotomic s = Cyclotomic::zero(coeff_order);
            for (int k = 0; k < n; ++k) s += at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

Matrix Matrix::inverse() const {
    Matrix work = *this;
    Matrix inv = identity(n, coeff_order);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!work.at(row, col).is_zero()) { pivot = row; break; }
        if (pivot < 0) throw DivisionByZeroError("singular matrix has no inverse");
        for (int j = 0; j < n; ++j) {
            std::swap(work.at(col, j), work.at(pivot, j));
            std::swap(inv.at(col, j), inv.at(pivot, j));
        }
        Cyclotomic d = work.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            work.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || work.at(row, col).is_zero()) continue;
            Cyclotomic f = work.at(row, col);
            for (int j = 0; j < n; ++j) {
                work.at(row, j) -= f * work.at(col, j);
                inv.at(row, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

MonomialMap MonomialMap::identity(int n, int coeff_order) {
    MonomialMap m;
    m.target.resize(n);
    std::iota(m.target.begin(), m.target.end(), 0);
    m.scale.assign(n, Cyclotomic::one(coeff_order));
    return m;
}

MonomialMap MonomialMap::transposition(int n, int i, int j, int coeff_order) {
    MonomialMap m = identity(n, coeff_order);
    std::swap(m.target[i], m.target[j]);
    return m;
}

MonomialMap MonomialMap::compose(const MonomialMap& inner) const {
    // (this o inner): first substitute via this, then via inner.
    MonomialMap r;
    int n = nvars();
    r.target.resize(n);
    r.scale.resize(n, Cyclotomic::one(scale.empty() ? 1 : scale[0].order()));
    for (int i = 0; i < n; ++i) {
        r.target[i] = inner.target[target[i]];
        r.scale[i] = scale[i] * inner.scale[target[i]];
    }
    return r;
}

Matrix MonomialMap::to_matrix(int order) const {
    Matrix m;
    m.n = nvars();
    m.coeff_order = order;
    m.a.assign(static_cast<size_t>(m.n) * m.n, Cyclotomic::zero(order));
    for (int i = 0; i < m.n; ++i) m.at(i, target[i]) = scale[i].embedded(order);
    return m;
}

int MonomialMap::order() const {
    MonomialMap cur = *this;
    MonomialMap id = identity(nvars(), scale.empty() ? 1 : scale[0].order());
    for (int k = 1; k <= 1000; ++k) {
        if (cur.target == id.target && cur.scale == id.scale) return k;
        cur = cur.compose(*this);
    }
    throw std::domain_error("monomial map order exceeds bound");
}

MultiPoly apply_linear_map(const MultiPoly& f, const Matrix& M) {
    if (M.n != f.nvars()) throw std::invalid_argument("matrix size does not match arity");
    if (M.coeff_order != f.coeff_order())
        throw OrderMismatchError("matrix/polynomial coefficient order mismatch");

    // Fast path for generalized permutation matrices.
    bool monomial = true;
    MonomialMap mm;
    mm.target.assign(f.nvars(), -1);
    mm.scale.assign(f.nvars(), Cyclotomic::zero(M.coeff_order));
    for (int i = 0; i < M.n && monomial; ++i) {
        int nonzero = -1;
        for (int j = 0; j < M.n; ++j) {
            if (M.at(i, j).is_zero()) continue;
            if (nonzero >= 0) { monomial = false; break; }
            nonzero = j;
        }
        if (nonzero < 0) monomial = false;
        if (monomial) {
            mm.target[i] = nonzero;
            mm.scale[i] = M.at(i, nonzero);
        }
    }
    if (monomial) return apply_monomial_map(f, mm);

    // General substitution: rows as linear forms, expanded by repeated
    // multiplication.
    std::vector<MultiPoly> rows;
    rows.reserve(f.nvars());
    for (int i = 0; i < M.n; ++i) {
        MultiPoly row(f.nvars(), f.coeff_order());
        for (int j = 0; j < M.n; ++j) {
            if (M.at(i, j).is_zero()) continue;
            Monomial mono(f.nvars(), 0);
            mono[j] = 1;
            row.add_term(mono, M.at(i, j));
        }
        rows.push_back(std::move(row));
    }
    MultiPoly result(f.nvars(), f.coeff_order());
    for (const auto& [m, c] : f.terms()) {
        MultiPoly prod = MultiPoly::constant(f.nvars(), c);
        for (int i = 0; i < f.nvars(); ++i)
            if (m[i] > 0) prod = prod * rows[i].pow(m[i]);
        result += prod;
    }
    return result;
}

MultiPoly apply_monomial_map(const MultiPoly& f, const MonomialMap& mm) {
    if (mm.nvars() != f.nvars()) throw std::invalid_argument("map arity mismatch");
    MultiPoly r(f.nvars(), f.coeff_order());
    Monomial image(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        std::fill(image.begin(), image.end(), 0);
        Cyclotomic coeff = c;
        for (int i = 0; i < f.nvars(); ++i) {
            if (m[i] == 0) continue;
            image[mm.target[i]] += m[i];
            Cyclotomic s = mm.scale[i].embedded(f.coeff_order());
            for (int e = 0; e < m[i]; ++e) coeff *= s;
        }
        r.add_term(image, coeff);
    }
    return r;
}

MultiPoly divide_exact_by_linear(const MultiPoly& f, const LinearForm& l) {
    if (l.nvars() != f.nvars()) throw std::invalid_argument("linear form arity mismatch");
    if (l.is_zero()) throw std::invalid_argument("division by the zero form");
    if (f.is_zero()) return MultiPoly(f.nvars(), f.coeff_order());

    int pivot = 0;
    while (l.covector[pivot].is_zero()) ++pivot;
    Cyclotomic lead = l.covector[pivot].embedded(f.coeff_order());
    Cyclotomic lead_inv = lead.inverse();

    // View f as univariate in the pivot variable: f = sum_e F_e * x_p^e.
    std::map<int, MultiPoly> layers;
    int top = 0;
    for (const auto& [m, c] : f.terms()) {
        Monomial flat = m;
        int e = flat[pivot];
        flat[pivot] = 0;
        top = std::max(top, e);
        auto it = layers.find(e);
        if (it == layers.end())
            it = layers.emplace(e, MultiPoly(f.nvars(), f.coeff_order())).first;
        it->second.add_term(flat, c);
    }
    auto layer = [&](int e) -> MultiPoly {
        auto it = layers.find(e);
        return it == layers.end() ? MultiPoly(f.nvars(), f.coeff_order()) : it->second;
    };

    // Remaining part of l, with the pivot removed.
    MultiPoly rest(f.nvars(), f.coeff_order());
    for (int j = 0; j < l.nvars(); ++j) {
        if (j == pivot || l.covector[j].is_zero()) continue;
        Monomial m(f.nvars(), 0);
        m[j] = 1;
        rest.add_term(m, l.covector[j].embedded(f.coeff_order()));
    }

    MultiPoly quotient(f.nvars(), f.coeff_order());
    MultiPoly carry(f.nvars(), f.coeff_order());
    for (int e = top; e >= 1; --e) {
        MultiPoly q_layer = (layer(e) + carry).scaled(lead_inv);
        for (const auto& [m, c] : q_layer.terms()) {
            Monomial full = m;
            full[pivot] += e - 1;
            quotient.add_term(full, c);
        }
        carry = -(q_layer * rest);
    }
    if (layer(0) + carry != MultiPoly(f.nvars(), f.coeff_order()))
        throw NotDivisibleError("polynomial is not divisible by the linear form");
    return quotient;
}

MultiPoly vandermonde(int nvars, const std::vector<int>& vars, int coeff_order, int power) {
    if (power < 1) throw std::invalid_argument("vandermonde power must be positive");
    for (size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] < 0 || vars[i] >= nvars)
            throw std::invalid_argument("vandermonde index out of range");
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw std::invalid_argument("duplicate vandermonde index");
    }
    MultiPoly r = MultiPoly::constant(nvars, Cyclotomic::one(coeff_order));
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j) {
            Monomial a(nvars, 0), b(nvars, 0);
            a[vars[i]] = power;
            b[vars[j]] = power;
            MultiPoly diff(nvars, coeff_order);
            diff.add_term(a, Cyclotomic::one(coeff_order));
            diff.add_term(b, -Cyclotomic::one(coeff_order));
            r = r * diff;
        }
    return r;
}

MultiPoly partial_derivative(const MultiPoly& f, int var) {
    if (var < 0 || var >= f.nvars()) throw std::invalid_argument("derivative index out of range");
    MultiPoly r(f.nvars(), f.coeff_order());
    for (const auto& [m, c] : f.terms()) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * Cyclotomic(Rational(m[var])).embedded(f.coeff_order()));
    }
    return r;
}

int multiplicity_along(const MultiPoly& f, const AdaptedFrame& frame) {
    if (f.is_zero()) throw std::domain_error("multiplicity of the zero polynomial");
    if (static_cast<int>(frame.is_normal.size()) != f.nvars() ||
        frame.substitution.n != f.nvars())
        throw std::invalid_argument("frame arity mismatch");
    MultiPoly g = apply_linear_map(f, frame.substitution);
    int best = -1;
    for (const auto& [m, c] : g.terms()) {
        int u = 0;
        for (int i = 0; i < g.nvars(); ++i)
            if (frame.is_normal[i]) u += m[i];
        if (best < 0 || u < best) best = u;
        if (best == 0) break;
    }
    return best;
}

} // namespace rca::poly
