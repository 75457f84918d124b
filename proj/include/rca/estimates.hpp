#ifndef RCA_ESTIMATES_HPP
#define RCA_ESTIMATES_HPP

#include <functional>

#include "rca/ideals.hpp"
#include "rca/rational.hpp"

namespace rca::estimates {

using exact::Rational;
using ideals::Partition;

// Default cap on exhaustive composition searches; callers may raise it
// explicitly, and exceeding it is a hard error rather than a truncation.
inline constexpr long kDefaultBruteCap = 24;

// Enumerates all t in Z^parts with t_i >= 0 and sum t_i = total.
// Returns false from the callback to stop.
void for_each_composition(long total, int parts,
                          const std::function<bool(const std::vector<long>&)>& fn);

// Closed form of mu_{m,Lambda} = min sum t_i(t_i-1)/2 over compositions of
// Lambda into m parts:  Lambda(Lambda-m)/(2m) + rho(m-rho)/(2m).
Rational mu_closed(int m, long Lambda);

// Exhaustive minimum over the composition domain.
Rational mu_brute(int m, long Lambda, long cap = kDefaultBruteCap);

// Exact tilde-mu: min over compositions t of z into a+b parts of
// sum_{i<=a} t_i + sum_i t_i(t_i-1), by exhaustive enumeration.
Rational mu_tilde(int a, int b, long z, long cap = kDefaultBruteCap);

// The same minimum through the split z = L1 + L2 over the two part groups:
// min_L1 (L1 + 2 mu_{a,L1} + 2 mu_{b,z-L1}).  O(z) and uncapped; the
// exhaustive route above is its oracle.
Rational mu_tilde_split(int a, int b, long z);

// Certified lower bound z^2/(a+b) - bz/(a+b).
Rational mu_tilde_bound(int a, int b, long z);

// Residue-sum inequality: with Lambda_1 = za/(a+b) - alpha(a+b) and
// Lambda_2 = zb/(a+b) + alpha(a+b),
//   F = b rho_a(L1)(a - rho_a(L1)) + a rho_b(L2)(b - rho_b(L2))
// satisfies F >= alpha(a+b)(ab - alpha(a+b)^2).
bool F_lower_bound_check(int a, int b, long z, const Rational& alpha);

// R_k(lambda) = sum rho_k(lambda_i)(k - rho_k(lambda_i)).
Rational R_k(const Partition& lambda, long k);

enum class CrocodileKind { L44, L45, L46 };

// The three partition inequalities, evaluated exactly.  For L46 the
// variant flag replaces max(0, floor(z-s)) by 0 (valid when s >= k).
bool crocodile_inequality(CrocodileKind kind, long k, const Partition& lambda, long z,
                          const Rational& s = Rational(0), bool variant_drop_max = false);

} // namespace rca::estimates

#endif
