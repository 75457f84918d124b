#ifndef RCA_LATTICE_HPP
#define RCA_LATTICE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rca/coxeter.hpp"
#include "rca/estimates.hpp"
#include "rca/ideals.hpp"
#include "rca/poly.hpp"

namespace rca::lattice {

using coxeter::Family;
using exact::Rational;
using ideals::IdealFamily;
using ideals::Partition;

// W-orbit of intersection-lattice subspaces, encoded as a partition of
// equal-coordinate block sizes, a count z of zero coordinates and, in type
// D at z = 0, a sign-twisted variant.  The ambient space is never a type.
struct OrbitType {
    Family family = Family::A; // A, B or D
    Partition lambda;          // partition of N - z
    int z = 0;
    bool minus_flag = false;

    int N() const { return lambda.sum() + z; }
    int codim() const { return N() - lambda.length(); }
    std::string str() const;
};

bool operator==(const OrbitType& a, const OrbitType& b);
bool operator<(const OrbitType& a, const OrbitType& b); // canonical order

// All orbit types of the reflection arrangement in R^N, in canonical order
// (z ascending, then lambda in descending lex, plus before minus).
//   A: partitions of N with lambda_1 > 1 (z = 0);
//   B: all (lambda, z) with 0 <= z <= N;
//   D: z = 0 and 2 <= z <= N, with minus twins at z = 0 for even N.
std::vector<OrbitType> enumerate_orbit_types(Family family, int N);

// Number of arrangement hyperplanes containing the representative subspace.
long hyperplane_count(const OrbitType& ot);

// Multiplicity-weighted count: A/D use c1 only; B weighs the coordinate
// hyperplanes with c2.
Rational kappa(const OrbitType& ot, const Rational& c1, const Rational& c2 = Rational(0));

// Closed-form multiplicity of the ideal family along the orbit type, per
// the per-family minimization formulas.  Exact for I_k, I_k^pm, J_k, Kcal,
// Delta and the maximal ideal; a certified lower bound for K_{k,s}.
Rational m_closed(const IdealFamily& fam, const OrbitType& ot);
bool m_closed_is_exact(ideals::FamilyTag tag);

// Exhaustive minimum over composition assignments of orbit-type blocks to
// generator blocks (the exact multiplicity of the generator orbit family).
// Hard error past the cap.
long m_brute(const IdealFamily& fam, const OrbitType& ot, int cap = 6);

// Independent route: expand the S_N orbit of each generator polynomial and
// measure the vanishing order on the representative subspace directly.
long m_brute_expansion(const IdealFamily& fam, const OrbitType& ot, int cap = 6);

// Adapted coordinates for the representative subspace of the orbit type.
poly::AdaptedFrame representative_frame(const OrbitType& ot);

struct LatticeSummary {
    OrbitType orbit_type;
    int codim = 0;
    long K = 0;
    std::optional<Rational> kappa;
    std::optional<Rational> m_closed;
    std::optional<long> m_brute;
};

// Explicit flats for N <= 4: intersect hyperplane subsets by exact linear
// algebra, deduplicate, classify into orbit types.  Counts keyed by the
// classified type.
std::map<std::string, long> explicit_lattice_counts(Family family, int N);

// Redundant minus types (a part of odd size) coincide with the plus orbit;
// this maps them onto their plus label and leaves everything else alone.
OrbitType delegate_minus(const OrbitType& ot);

} // namespace rca::lattice

#endif
