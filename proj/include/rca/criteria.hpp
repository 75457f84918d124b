#ifndef RCA_CRITERIA_HPP
#define RCA_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "rca/coxeter.hpp"
#include "rca/dunkl.hpp"
#include "rca/ideals.hpp"
#include "rca/lattice.hpp"

namespace rca::criteria {

using coxeter::GroupSpec;
using coxeter::ParabolicType;
using dunkl::MultiplicityAssignment;
using exact::Rational;
using ideals::IdealFamily;
using lattice::OrbitType;

enum class Status { Converges, Diverges, Undecided };

std::string status_name(Status s);

struct Witness {
    std::optional<OrbitType> orbit;
    std::optional<std::vector<ParabolicType>> parabolic;

    std::string str() const;
};

// Inequality terms at the witness (or at the tightest type when converging).
struct VerdictTerms {
    Rational kappa{0};
    int codim = 0;
    Rational m{0};
};

struct ConvergenceVerdict {
    Status status = Status::Undecided;
    bool boundary = false; // the witness hits equality rather than a strict excess
    std::optional<Witness> witness;
    VerdictTerms terms;
    std::vector<std::string> chain; // applied rules and assumptions, in order

    std::string str() const;
};

// Discrepancy of the blow-up divisor centered at the orbit type:
// a_L = codim - 1 - 2*kappa + 2*m.
struct DiscrepancyRecord {
    OrbitType orbit_type;
    Rational a_L;
};

// Decides convergence of the Gaussian-product integrand for the ideal family
// over the A/B/D arrangement: the strict inequality
//   kappa(L) < codim(L)/2 + m(L)
// must hold for every orbit type.  The first violation in canonical order is
// the witness; equality is reported as divergence with the boundary flag.
ConvergenceVerdict check_convergence(const GroupSpec& spec, const MultiplicityAssignment& mult,
                                     const IdealFamily& fam);

// Per-orbit-type discrepancies for the same data.
std::vector<DiscrepancyRecord> discrepancies(const GroupSpec& spec,
                                             const MultiplicityAssignment& mult,
                                             const IdealFamily& fam);

// Multiplicity semantics for parabolic-granularity checks.
enum class ParabolicModel { MinimalSubmodule, PrincipalDelta, VanishingAtZero, Unit };

struct ExceptionalOptions {
    // Lower bound for mult_0(f) on the minimal submodule, recorded as an
    // assumption (2 when c is singular and c != 1/h).
    int mult0_lower = 2;
    // Grants m >= 1 on flats having a stabilizer factor with h = 1/c, via
    // containment of the minimal submodule in the parabolic ideal.
    bool parabolic_ideal_strictness = false;
};

// Convergence check at irreducible-parabolic-type granularity (constant
// multiplicity c), used for the exceptional groups and the uniform c = 1/2,
// c = 1/h statements.  Flats are processed as factor-type multisets.
ConvergenceVerdict check_convergence_parabolic(const GroupSpec& spec, const Rational& c,
                                               ParabolicModel model,
                                               const ExceptionalOptions& opts = {});

// Convenience wrapper for the minimal-submodule criterion at c = 1/d.
ConvergenceVerdict exceptional_criterion(const GroupSpec& spec, const Rational& c,
                                         const ExceptionalOptions& opts = {});

// Searches the parabolic flats for a divergence witness at constant c: a
// multiset with kappa >= codim/2 where the minimal submodule provably has
// multiplicity 0 (c is not a singular value for any stabilizer factor).
std::optional<ConvergenceVerdict> find_divergence_witness(const GroupSpec& spec,
                                                          const Rational& c);

// A divergence statement about the minimal-submodule Gaussian product of an
// irreducible real group at parameter c.
struct DivergenceFact {
    ParabolicType group;
    Rational c;
    std::string reason;
    std::vector<std::string> chain;
};

// Contrapositive closure of the restriction-functor convergence: divergence
// for a parabolic factor type propagates to every candidate group containing
// that type parabolically.  Input facts are returned along with the derived
// ones; chains record the inference.
std::vector<DivergenceFact> res_propagate(const std::vector<DivergenceFact>& base,
                                          const std::vector<GroupSpec>& candidates);

// Symbolic eigenvalue certificates: grad_{e1}(x1 (x2^2 - x3^2)) is
// proportional to x2^2 - x3^2; returns the factor.  Negative values certify
// non-unitarity.
Rational eigen_nonunitarity_D(int N);                     // c = 1/N
Rational eigen_nonunitarity_B(int N, const Rational& a);  // c1 = 1/N, c2 = a

struct TheoremCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct TheoremReport {
    std::vector<TheoremCheck> checks;
    bool all_pass() const;
};

// Reproduces the convergence statements for the classical families across
// their stated hypothesis grids (capped at Nmax variables).
TheoremReport theorem_suite(int Nmax = 8);

} // namespace rca::criteria

#endif
