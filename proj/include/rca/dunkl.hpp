#ifndef RCA_DUNKL_HPP
#define RCA_DUNKL_HPP

#include <string>
#include <vector>

#include "rca/coxeter.hpp"
#include "rca/poly.hpp"

namespace rca::dunkl {

using exact::Rational;
using poly::MultiPoly;

// W-invariant multiplicity function.  One value per root orbit:
//   A_n, D_N:    {c}
//   B_N:         {c(e_i +- e_j), c(e_i)}
//   G(m,p,N):    {c_1, ..., c_{m/p}}
struct MultiplicityAssignment {
    std::vector<Rational> values;

    static MultiplicityAssignment constant(const Rational& c) { return {{c}}; }
    static MultiplicityAssignment pair(const Rational& c1, const Rational& c2) {
        return {{c1, c2}};
    }
    // Comma-separated "p/q" values.
    static MultiplicityAssignment parse(const std::string& text);
    std::string str() const;
};

// Dunkl operator for a real reflection group applied as
//   grad_xi f = d_xi f - sum_{alpha in R+} c(alpha) (alpha,xi)
//               * (f - s_alpha f) / (alpha, x).
// Each summand is scale invariant under alpha -> t*alpha, so the stored root
// normalization is immaterial; the convention here is e_i - e_j, e_i +- e_j,
// e_i.
MultiPoly dunkl_apply(const coxeter::RootDatum& datum, const MultiplicityAssignment& mult,
                      const std::vector<Rational>& direction, const MultiPoly& f);
MultiPoly dunkl_apply(const coxeter::RootDatum& datum, const MultiplicityAssignment& mult,
                      int direction, const MultiPoly& f);

// Dunkl-Opdam operator for G(m,p,N): the coordinate derivative minus the
// s_{ij}^k divided differences weighted by c_1 minus the tau-sums weighted
// by c_2..c_{m/p}.  Rational input is embedded into Q(zeta_m) explicitly.
MultiPoly dunkl_opdam_apply(const coxeter::GroupSpec& spec, const MultiplicityAssignment& mult,
                            int direction, const MultiPoly& f);

struct SingularReport {
    bool singular = false;
    int direction = -1;           // first failing direction when not singular
    MultiPoly residual{0};        // the nonzero image there

    std::string describe() const;
};

// True iff every Dunkl (or Dunkl-Opdam) operator annihilates f.
SingularReport is_singular(const coxeter::GroupSpec& spec, const MultiplicityAssignment& mult,
                           const MultiPoly& f);

enum class LemaltVariant { V1, V1Prime, V2, V2Prime };

// Checks the divided-difference identity for the operator
//   L = sum_{j=2}^{n+1} sum_{k=0}^{m-1} (1 - s_{1j}^k) / (x_1 - xi^k x_j)
// against the stated first-order operator on the four polynomial shapes.
bool verify_lemalt(int n, int m, int k, LemaltVariant variant);

// grad_a grad_b f - grad_b grad_a f; the contract is the zero polynomial.
MultiPoly commutator_residual(const coxeter::GroupSpec& spec,
                              const MultiplicityAssignment& mult, int dir_a, int dir_b,
                              const MultiPoly& f);

} // namespace rca::dunkl

#endif
