#ifndef RCA_COXETER_HPP
#define RCA_COXETER_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "rca/poly.hpp"
#include "rca/rational.hpp"

namespace rca::coxeter {

using exact::Rational;

enum class Family { A, B, D, G, E6, E7, E8, F4, H3, H4, I2 };

std::string family_name(Family f);

// Which reflection group: classical family with a rank, the complex series
// G(m,p,N) with p | m, or a fixed exceptional type.
struct GroupSpec {
    Family family = Family::A;
    int rank = 1;
    int m = 0, p = 0; // G family only
    int label = 0;    // I2(p) edge label

    // Number of polynomial variables the group acts on (A_n acts on n+1).
    int ambient_dim() const;
    // True for Coxeter groups; G(m,p,N) only when m <= 2.
    bool is_real() const;

    std::string str() const;
    static GroupSpec parse(const std::string& text);

    static GroupSpec A(int n) { return {Family::A, n, 0, 0, 0}; }
    static GroupSpec B(int n) { return {Family::B, n, 0, 0, 0}; }
    static GroupSpec D(int n) { return {Family::D, n, 0, 0, 0}; }
    static GroupSpec G(int m, int p, int N);
    static GroupSpec exceptional(Family f);
    static GroupSpec I2(int p) { return {Family::I2, 2, 0, 0, p}; }
};

bool operator==(const GroupSpec& a, const GroupSpec& b);

// Root and reflection data.  Explicit roots are tabulated for the classical
// families and E6/E7/E8/F4; H3, H4 and I2(p) carry only counts (their
// criteria run at parabolic-type granularity, so golden-ratio coordinates
// are never needed).  For the G family the reflections are the monomial
// matrices s_{ij}^k and the diagonal tau_i^s.
struct RootDatum {
    GroupSpec spec;
    int root_dim = 0;
    std::vector<std::vector<Rational>> positive_roots;
    long root_count = 0;
    std::vector<poly::MonomialMap> reflections; // classical and G families
};

RootDatum build_root_datum(const GroupSpec& spec);

// Degrees d_1 <= ... <= d_rank and the Coxeter number h = d_rank.
// Rejects G(m,p,N) with m > 2; G(1,1,N) and G(2,p,N) delegate to A/B/D.
std::pair<std::vector<int>, int> degrees_and_coxeter_number(const GroupSpec& spec);

// Coxeter diagram: nodes 0..rank-1, edges (a, b, label) with label >= 3.
struct Diagram {
    int nodes = 0;
    std::vector<std::array<int, 3>> edges;
};

Diagram diagram(const GroupSpec& spec);

// Classified type of an irreducible (parabolic) Coxeter group.
struct ParabolicType {
    Family family = Family::A;
    int rank = 1;
    int label = 0; // I2 only

    std::string str() const;
};

bool operator==(const ParabolicType& a, const ParabolicType& b);
bool operator<(const ParabolicType& a, const ParabolicType& b);

int coxeter_number(const ParabolicType& t);
long positive_root_count(const ParabolicType& t); // = h * rank / 2
std::vector<int> degrees_of(const ParabolicType& t);

ParabolicType type_of(const GroupSpec& spec); // real groups only

// Types of connected induced subdiagrams of the Coxeter diagram, excluding
// the full diagram, with multiplicities.  Sorted canonically.
std::vector<std::pair<ParabolicType, int>> irreducible_parabolic_types(const GroupSpec& spec);

// Factor-type multisets of all standard parabolic subgroups (one multiset
// per subset of diagram nodes, deduplicated, each sorted).  The full node
// set is included only when include_full is set; the empty subgroup never.
std::vector<std::vector<ParabolicType>> parabolic_type_multisets(const GroupSpec& spec,
                                                                 bool include_full);

// Constant-multiplicity singular values: c = j/d for a degree d and a
// positive integer j with c not an integer.
bool is_singular_value(const GroupSpec& spec, const Rational& c);
bool is_singular_value(const ParabolicType& t, const Rational& c);

} // namespace rca::coxeter

#endif
