#ifndef RCA_REPORT_HPP
#define RCA_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "rca/criteria.hpp"

namespace rca::report {

using criteria::ConvergenceVerdict;
using exact::Rational;

// Versioned JSON encoding of a verdict:
// {"schema":"v1","status":...,"witness":...,"kappa":...,"codim":...,"m":...,"chain":[...]}.
std::string verdict_to_json(const ConvergenceVerdict& v);
ConvergenceVerdict verdict_from_json(const std::string& text);

struct SingularValueRow {
    std::string group;
    Rational c1{0}, c2{0};
    bool equal_parameters = false;
    std::string verdict;
    std::string certificate;
    std::optional<Rational> lambda; // eigenvalue certificate for divergent rows
};

// One row per singular value c = 1/d of B_N or D_N (3 <= N <= Nmax):
// the convergence verdict with the certifying ideal family, and for odd-N
// D_N at c = 1/N the divergence flag with the eigenvalue certificate.
std::vector<SingularValueRow> singular_value_report(coxeter::Family family, int Nmax);

std::string rows_to_text(const std::vector<SingularValueRow>& rows);
std::string rows_to_json(const std::vector<SingularValueRow>& rows);

struct LatticeDumpOptions {
    std::optional<Rational> c1, c2;
    std::optional<ideals::IdealFamily> fam;
    bool with_brute = false;
};

std::vector<lattice::LatticeSummary> lattice_dump(coxeter::Family family, int N,
                                                  const LatticeDumpOptions& opts);
std::string lattice_to_csv(const std::vector<lattice::LatticeSummary>& rows);
std::string lattice_to_json(const std::vector<lattice::LatticeSummary>& rows);

} // namespace rca::report

#endif
