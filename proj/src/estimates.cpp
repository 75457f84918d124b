#include "rca/estimates.hpp"

#include <optional>
#include <string>

#include "rca/errors.hpp"

namespace rca::estimates {

namespace {

bool compositions_rec(std::vector<long>& t, int pos, long remaining,
                      const std::function<bool(const std::vector<long>&)>& fn) {
    if (pos + 1 == static_cast<int>(t.size())) {
        t[pos] = remaining;
        return fn(t);
    }
    for (long v = 0; v <= remaining; ++v) {
        t[pos] = v;
        if (!compositions_rec(t, pos + 1, remaining - v, fn)) return false;
    }
    return true;
}

void check_cap(long value, long cap, const char* what) {
    if (value > cap)
        throw BruteCapError(std::string(what) + " exceeds the brute-force cap " +
                            std::to_string(cap));
}

} // namespace

void for_each_composition(long total, int parts,
                          const std::function<bool(const std::vector<long>&)>& fn) {
    if (parts < 1) throw std::invalid_argument("compositions need at least one part");
    if (total < 0) throw std::invalid_argument("compositions of a negative total");
    std::vector<long> t(parts);
    compositions_rec(t, 0, total, fn);
}

Rational mu_closed(int m, long Lambda) {
    if (m < 1) throw std::invalid_argument("mu needs m >= 1");
    if (Lambda < 0) throw std::invalid_argument("mu needs Lambda >= 0");
    long rho = Lambda % m;
    return Rational(Lambda) * Rational(Lambda - m, 2L * m) +
           Rational(rho) * Rational(m - rho, 2L * m);
}

Rational mu_brute(int m, long Lambda, long cap) {
    if (m < 1) throw std::invalid_argument("mu needs m >= 1");
    if (Lambda < 0) throw std::invalid_argument("mu needs Lambda >= 0");
    check_cap(Lambda, cap, "mu_brute total");
    long best = -1;
    for_each_composition(Lambda, m, [&](const std::vector<long>& t) {
        long c = 0;
        for (long v : t) c += v * (v - 1) / 2;
        if (best < 0 || c < best) best = c;
        return best != 0;
    });
    return Rational(best);
}

Rational mu_tilde(int a, int b, long z, long cap) {
    if (a < 0 || b < 0 || a + b < 1)
        throw std::invalid_argument("mu_tilde needs a, b >= 0 with a + b >= 1");
    if (z < 0) throw std::invalid_argument("mu_tilde needs z >= 0");
    check_cap(z, cap, "mu_tilde total");
    long best = -1;
    for_each_composition(z, a + b, [&](const std::vector<long>& t) {
        long c = 0;
        for (int i = 0; i < a; ++i) c += t[i];
        for (long v : t) c += v * (v - 1);
        if (best < 0 || c < best) best = c;
        return best != 0;
    });
    return Rational(best);
}

Rational mu_tilde_split(int a, int b, long z) {
    if (a < 0 || b < 0 || a + b < 1)
        throw std::invalid_argument("mu_tilde needs a, b >= 0 with a + b >= 1");
    if (z < 0) throw std::invalid_argument("mu_tilde needs z >= 0");
    // All of z must sit in one group when the other is empty.
    std::optional<Rational> best;
    for (long L1 = (b == 0 ? z : 0); L1 <= (a == 0 ? 0 : z); ++L1) {
        Rational cost = Rational(L1) + Rational(2) * mu_closed(std::max(a, 1), L1) +
                        Rational(2) * mu_closed(std::max(b, 1), z - L1);
        if (!best || cost < *best) best = cost;
    }
    return *best;
}

Rational mu_tilde_bound(int a, int b, long z) {
    if (a + b < 1) throw std::invalid_argument("mu_tilde_bound needs a + b >= 1");
    return Rational(z) * Rational(z, a + b) - Rational(b, a + b) * Rational(z);
}

bool F_lower_bound_check(int a, int b, long z, const Rational& alpha) {
    if (a < 1 || b < 1 || z < 0)
        throw std::invalid_argument("F_lower_bound_check needs a, b >= 1 and z >= 0");
    Rational ab_sum(a + b);
    if (alpha < Rational(0) || alpha > Rational(a) * Rational(b) / (ab_sum * ab_sum))
        throw std::invalid_argument("alpha outside [0, ab/(a+b)^2]");
    Rational L1 = Rational(z) * Rational(a, a + b) - alpha * ab_sum;
    Rational L2 = Rational(z) * Rational(b, a + b) + alpha * ab_sum;
    Rational ra = exact::rho_mod(L1, a);
    Rational rb = exact::rho_mod(L2, b);
    Rational F = Rational(b) * ra * (Rational(a) - ra) + Rational(a) * rb * (Rational(b) - rb);
    Rational rhs = alpha * ab_sum * (Rational(a) * Rational(b) - alpha * ab_sum * ab_sum);
    return F >= rhs;
}

Rational R_k(const Partition& lambda, long k) {
    Rational total(0);
    for (int part : lambda.parts) {
        Rational r = exact::rho_mod(Rational(part), k);
        total += r * (Rational(k) - r);
    }
    return total;
}

bool crocodile_inequality(CrocodileKind kind, long k, const Partition& lambda, long z,
                          const Rational& s, bool variant_drop_max) {
    if (k < 1) throw std::invalid_argument("crocodile inequalities need k >= 1");
    const long l = lambda.length();
    const long N = lambda.sum() + z;
    Rational sum_quad_k(0);   // sum lambda_i (lambda_i - k)
    Rational sum_quad_one(0); // sum lambda_i (lambda_i - 1)
    for (int part : lambda.parts) {
        sum_quad_k += Rational(part) * Rational(part - k);
        sum_quad_one += Rational(part) * Rational(part - 1);
    }
    Rational Rk = R_k(lambda, k);

    switch (kind) {
        case CrocodileKind::L44: {
            if (z < 0 || z > N) throw std::invalid_argument("L44 needs 0 <= z <= N");
            Rational lhs = sum_quad_k / Rational(k) + Rk / Rational(k) + Rational(N - l);
            Rational rhs = sum_quad_one / Rational(k) + Rational(z);
            return lhs >= rhs;
        }
        case CrocodileKind::L45: {
            if (z != 0) throw std::invalid_argument("L45 needs z = 0");
            if (lambda.length() == 0 || lambda.parts[0] <= 1)
                throw std::invalid_argument("L45 needs lambda_1 > 1");
            Rational lhs = sum_quad_k / Rational(k) + Rk / Rational(k) + Rational(N - l);
            Rational rhs = sum_quad_one / Rational(k + 1);
            return lhs > rhs;
        }
        case CrocodileKind::L46: {
            if (lambda.length() > 0 && lambda.parts[0] == 1 && z < 1)
                throw std::invalid_argument("L46 needs z >= 1 when lambda_1 = 1");
            if (lambda.length() == 0 && z < 1)
                throw std::invalid_argument("L46 needs z >= 1 for the empty partition");
            Rational rho_z = exact::rho_mod(Rational(z), k);
            Rational max_term(0);
            if (!variant_drop_max) {
                exact::Integer fl = (Rational(z) - s).floor();
                if (fl > 0) max_term = Rational(fl);
            }
            Rational lhs = sum_quad_k / Rational(2 * k) + Rk / Rational(2 * k) +
                           Rational(z) * Rational(z - k) / Rational(k) +
                           rho_z * (Rational(k) - rho_z) / Rational(k) + max_term +
                           Rational(N - l) / Rational(2);
            Rational rhs = sum_quad_one / Rational(2 * (k + 1)) +
                           Rational(z) * Rational(z - 1) / Rational(k + 1) +
                           (Rational(k + 1) / Rational(2) - s) / Rational(k + 1) * Rational(z);
            return lhs > rhs;
        }
    }
    throw std::invalid_argument("unknown inequality kind");
}

} // namespace rca::estimates
