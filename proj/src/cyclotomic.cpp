#include "rca/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace rca::exact {

namespace {

// Dense univariate polynomials over Q, coefficients ascending by degree.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Division with remainder; b need not be monic.
void divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
    q.assign(a.size(), Rational(0));
    while (deg(a) >= deg(b) && !a.empty()) {
        Rational c = a.back() / b.back();
        int shift = deg(a) - deg(b);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        trim(a);
    }
    trim(q);
    r = std::move(a);
}

// Extended gcd: returns (g, u) with u*a + v*b = g, g monic.
std::pair<QPoly, QPoly> ext_gcd_first(QPoly a, QPoly b) {
    QPoly u0{Rational(1)}, u1;
    while (!b.empty()) {
        QPoly q, r;
        divmod(a, b, q, r);
        QPoly u2 = sub(u0, mul(q, u1));
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (a.empty()) return {a, u0};
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : u0) c /= lead;
    return {a, u0};
}

const std::vector<Integer>& phi_poly(int m);

std::vector<Integer> compute_phi_poly(int m) {
    // (t^m - 1) / prod_{d | m, d < m} Phi_d, exact integer division.
    std::vector<Integer> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const std::vector<Integer>& div = phi_poly(d);
        std::vector<Integer> quot(num.size() - div.size() + 1);
        for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
            Integer c = num[i + div.size() - 1]; // div is monic
            quot[i] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < div.size(); ++j) num[i + j] -= c * div[j];
        }
        num = std::move(quot);
    }
    return num;
}

const std::vector<Integer>& phi_poly(int m) {
    static std::map<int, std::vector<Integer>> cache;
    static std::recursive_mutex mtx;
    std::lock_guard<std::recursive_mutex> lock(mtx);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, compute_phi_poly(m)).first;
    return it->second;
}

QPoly phi_poly_q(int m) {
    const auto& z = phi_poly(m);
    QPoly q(z.size());
    for (size_t i = 0; i < z.size(); ++i) q[i] = Rational(z[i]);
    return q;
}

// Reduce modulo Phi_m and pad to length phi(m).
std::vector<Rational> reduce_mod_phi(QPoly p, int m) {
    int d = euler_phi(m);
    const auto& phi = phi_poly(m);
    while (deg(p) >= d) {
        Rational c = p.back(); // Phi_m is monic
        int shift = deg(p) - d;
        p.pop_back();
        for (int j = 0; j < d; ++j) p[j + shift] -= c * Rational(phi[j]);
        trim(p);
    }
    p.resize(d);
    return p;
}

} // namespace

int euler_phi(int m) {
    if (m <= 0) throw std::invalid_argument("euler_phi needs m >= 1");
    int result = m;
    int n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<Integer>& cyclotomic_polynomial(int m) {
    if (m <= 0) throw std::invalid_argument("cyclotomic_polynomial needs m >= 1");
    return phi_poly(m);
}

Cyclotomic Cyclotomic::zero(int order) {
    if (order < 1) throw std::invalid_argument("order must be positive");
    return Cyclotomic(order, std::vector<Rational>(euler_phi(order)));
}

Cyclotomic Cyclotomic::one(int order) {
    Cyclotomic c = zero(order);
    c.coords_[0] = Rational(1);
    return c;
}

Cyclotomic Cyclotomic::root_of_unity(int m, long k) {
    if (m < 1) throw std::invalid_argument("order must be positive");
    long e = ((k % m) + m) % m;
    QPoly p(static_cast<size_t>(e) + 1);
    p[e] = Rational(1);
    return Cyclotomic(m, reduce_mod_phi(std::move(p), m));
}

Cyclotomic Cyclotomic::from_coords(int order, std::vector<Rational> coords) {
    if (order < 1) throw std::invalid_argument("order must be positive");
    if (static_cast<int>(coords.size()) != euler_phi(order))
        throw std::invalid_argument("coordinate vector length must be phi(order)");
    return Cyclotomic(order, std::move(coords));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Rational& r) { return r.is_zero(); });
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::as_rational() const {
    if (!is_rational())
        throw std::domain_error("cyclotomic value is not rational: " + str());
    return coords_[0];
}

Cyclotomic Cyclotomic::embedded(int new_order) const {
    if (new_order == order_) return *this;
    if (is_rational()) {
        Cyclotomic r = zero(new_order);
        r.coords_[0] = coords_[0];
        return r;
    }
    if (new_order % order_ != 0)
        throw OrderMismatchError("cannot embed order " + std::to_string(order_) +
                                 " into order " + std::to_string(new_order));
    int step = new_order / order_;
    Cyclotomic r = zero(new_order);
    for (size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j].is_zero()) continue;
        Cyclotomic basis = root_of_unity(new_order, static_cast<long>(j) * step);
        for (size_t i = 0; i < r.coords_.size(); ++i)
            r.coords_[i] += coords_[j] * basis.coords_[i];
    }
    return r;
}

void Cyclotomic::check_same_order(const Cyclotomic& o, const char* op) const {
    if (order_ != o.order_)
        throw OrderMismatchError(std::string(op) + " on mismatched cyclotomic orders " +
                                 std::to_string(order_) + " and " + std::to_string(o.order_));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_same_order(o, "addition");
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_same_order(o, "subtraction");
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    check_same_order(o, "multiplication");
    if (order_ == 1) {
        coords_[0] *= o.coords_[0];
        return *this;
    }
    QPoly prod = mul(coords_, o.coords_);
    coords_ = reduce_mod_phi(std::move(prod), order_);
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZeroError("cyclotomic inverse of zero");
    if (order_ == 1)
        return Cyclotomic(order_, {Rational(1) / coords_[0]});
    QPoly a = coords_;
    trim(a);
    auto [g, u] = ext_gcd_first(a, phi_poly_q(order_));
    // Phi_m is irreducible over Q, so gcd(a, Phi_m) = 1 for nonzero a.
    return Cyclotomic(order_, reduce_mod_phi(std::move(u), order_));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
    check_same_order(o, "division");
    return *this *= o.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order_ == b.order_ && a.coords_ == b.coords_;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        Rational c = coords_[i];
        if (first) {
            if (c < Rational(0)) { os << "-"; c = -c; }
        } else {
            os << (c < Rational(0) ? " - " : " + ");
            if (c < Rational(0)) c = -c;
        }
        if (i == 0) {
            os << c.str();
        } else {
            if (c != Rational(1)) os << c.str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

struct Term {
    Rational coeff;
    int power = 0;
};

Term parse_term(const std::string& text) {
    // [rational] [* z[^k]]  |  z[^k]
    Term t;
    size_t zpos = text.find('z');
    if (zpos == std::string::npos) {
        t.coeff = Rational::parse(text);
        return t;
    }
    std::string head = text.substr(0, zpos);
    while (!head.empty() && (head.back() == '*' || head.back() == ' ')) head.pop_back();
    t.coeff = head.empty() ? Rational(1) : Rational::parse(head);
    std::string tail = text.substr(zpos + 1);
    if (tail.empty()) {
        t.power = 1;
    } else if (tail[0] == '^') {
        t.power = std::stoi(tail.substr(1));
    } else {
        throw std::invalid_argument("bad cyclotomic term '" + text + "'");
    }
    return t;
}

} // namespace

Cyclotomic Cyclotomic::parse(const std::string& text, int order) {
    // Split on top-level " + " / " - ", tolerating missing spaces.
    std::vector<std::pair<std::string, bool>> pieces; // (term, negated)
    std::string cur;
    bool neg = false;
    size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if ((ch == '+' || ch == '-') && !cur.empty() &&
            cur.find_first_not_of(' ') != std::string::npos) {
            pieces.emplace_back(cur, neg);
            neg = (ch == '-');
            cur.clear();
        } else if (ch == '-' && cur.find_first_not_of(' ') == std::string::npos) {
            neg = !neg;
        } else if (ch != ' ') {
            cur += ch;
        }
        ++i;
    }
    if (cur.find_first_not_of(' ') != std::string::npos) pieces.emplace_back(cur, neg);

    Cyclotomic result = zero(order);
    for (auto& [piece, negated] : pieces) {
        Term t = parse_term(piece);
        Cyclotomic term = root_of_unity(order, t.power);
        Rational c = negated ? -t.coeff : t.coeff;
        for (size_t j = 0; j < term.coords_.size(); ++j)
            result.coords_[j] += c * term.coords_[j];
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
    return os << c.str();
}

} // namespace rca::exact
