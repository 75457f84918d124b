#include "rca/report.hpp"

#include <sstream>

#include <json.hpp>

namespace rca::report {

using coxeter::Family;
using coxeter::GroupSpec;
using criteria::Status;
using dunkl::MultiplicityAssignment;
using ideals::IdealFamily;
using json = nlohmann::json;

namespace {

json witness_to_json(const criteria::Witness& w) {
    json j;
    if (w.orbit) {
        j["kind"] = "orbit";
        j["family"] = coxeter::family_name(w.orbit->family);
        j["lambda"] = w.orbit->lambda.parts;
        j["z"] = w.orbit->z;
        j["minus"] = w.orbit->minus_flag;
    } else if (w.parabolic) {
        j["kind"] = "parabolic";
        json factors = json::array();
        for (const auto& t : *w.parabolic) factors.push_back(t.str());
        j["factors"] = factors;
    }
    return j;
}

criteria::Witness witness_from_json(const json& j) {
    criteria::Witness w;
    if (j.value("kind", "") == "orbit") {
        lattice::OrbitType ot;
        std::string fam = j.at("family").get<std::string>();
        ot.family = fam == "A" ? Family::A : fam == "B" ? Family::B : Family::D;
        ot.lambda = ideals::Partition(j.at("lambda").get<std::vector<int>>());
        ot.z = j.at("z").get<int>();
        ot.minus_flag = j.at("minus").get<bool>();
        w.orbit = ot;
    } else if (j.value("kind", "") == "parabolic") {
        std::vector<coxeter::ParabolicType> factors;
        for (const auto& f : j.at("factors")) {
            std::string name = f.get<std::string>();
            coxeter::ParabolicType t;
            if (name == "E6") t = {Family::E6, 6, 0};
            else if (name == "E7") t = {Family::E7, 7, 0};
            else if (name == "E8") t = {Family::E8, 8, 0};
            else if (name == "F4") t = {Family::F4, 4, 0};
            else if (name == "H3") t = {Family::H3, 3, 0};
            else if (name == "H4") t = {Family::H4, 4, 0};
            else if (name.rfind("I2(", 0) == 0)
                t = {Family::I2, 2, std::stoi(name.substr(3, name.size() - 4))};
            else {
                char fam = name[0];
                int rank = std::stoi(name.substr(1));
                t = {fam == 'A' ? Family::A : fam == 'B' ? Family::B : Family::D, rank, 0};
            }
            factors.push_back(t);
        }
        w.parabolic = std::move(factors);
    }
    return w;
}

} // namespace

std::string verdict_to_json(const ConvergenceVerdict& v) {
    json j;
    j["schema"] = "v1";
    j["status"] = criteria::status_name(v.status);
    j["boundary"] = v.boundary;
    j["kappa"] = v.terms.kappa.str();
    j["codim"] = v.terms.codim;
    j["m"] = v.terms.m.str();
    j["chain"] = v.chain;
    if (v.witness) j["witness"] = witness_to_json(*v.witness);
    return j.dump();
}

ConvergenceVerdict verdict_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("schema", "") != "v1")
        throw std::invalid_argument("unsupported verdict schema");
    ConvergenceVerdict v;
    std::string status = j.at("status").get<std::string>();
    v.status = status == "Converges"  ? Status::Converges
               : status == "Diverges" ? Status::Diverges
                                      : Status::Undecided;
    v.boundary = j.at("boundary").get<bool>();
    v.terms.kappa = Rational::parse(j.at("kappa").get<std::string>());
    v.terms.codim = j.at("codim").get<int>();
    v.terms.m = Rational::parse(j.at("m").get<std::string>());
    v.chain = j.at("chain").get<std::vector<std::string>>();
    if (j.contains("witness")) v.witness = witness_from_json(j.at("witness"));
    return v;
}

std::vector<SingularValueRow> singular_value_report(Family family, int Nmax) {
    if (family != Family::B && family != Family::D)
        throw std::invalid_argument("singular-value report covers the B and D families");
    std::vector<SingularValueRow> rows;
    for (int N = 3; N <= Nmax; ++N) {
        GroupSpec spec = family == Family::B ? GroupSpec::B(N) : GroupSpec::D(N);
        auto [degrees, h] = coxeter::degrees_and_coxeter_number(spec);
        std::vector<int> seen;
        for (int d : degrees) {
            if (std::find(seen.begin(), seen.end(), d) != seen.end()) continue;
            seen.push_back(d);
            SingularValueRow row;
            row.group = spec.str();
            if (family == Family::D) {
                row.c1 = Rational(1, d);
                if (d % 2 == 0) {
                    int r = d / 2;
                    IdealFamily fam = 2 * r <= N ? IdealFamily::K(N, 2 * r - 1, r - 1)
                                                 : IdealFamily::J(N, r);
                    auto v = criteria::check_convergence(
                        spec, MultiplicityAssignment::constant(row.c1), fam);
                    row.verdict = criteria::status_name(v.status);
                    row.certificate = "Gaussian product converges on " + fam.str() +
                                      " => unitary (contravariant-form reduction)";
                } else {
                    // d = N odd
                    if (N >= 5) {
                        auto v = criteria::check_convergence(
                            spec, MultiplicityAssignment::constant(row.c1),
                            IdealFamily::Ipm(N, N - 1));
                        row.verdict = criteria::status_name(v.status);
                        row.lambda = criteria::eigen_nonunitarity_D(N);
                        row.certificate =
                            "diverges (integral) with witness " +
                            (v.witness ? v.witness->str() : "") +
                            "; non-unitary: eigenvalue " + row.lambda->str() + " < 0";
                    } else {
                        auto v = criteria::check_convergence(
                            spec, MultiplicityAssignment::constant(row.c1),
                            IdealFamily::Ipm(N, 2));
                        row.verdict = criteria::status_name(v.status);
                        row.certificate =
                            "Gaussian product converges on Ipm:k=2 => unitary";
                    }
                }
            } else {
                // Equal parameters c1 = c2 = 1/d; the B degrees are even.
                row.c1 = row.c2 = Rational(1, d);
                row.equal_parameters = true;
                int r = d;
                int s = r / 2 - 1;
                IdealFamily fam = r <= N ? IdealFamily::K(N, r - 1, r - s - 1)
                                         : IdealFamily::J(N, s);
                auto v = criteria::check_convergence(
                    spec, MultiplicityAssignment::pair(row.c1, row.c2), fam);
                row.verdict = criteria::status_name(v.status);
                row.certificate = "Gaussian product converges on " + fam.str() +
                                  " => unitary (contravariant-form reduction)";
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string rows_to_text(const std::vector<SingularValueRow>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << r.group << "  c=" << r.c1.str();
        if (r.equal_parameters) os << " (=c2)";
        else if (!r.c2.is_zero()) os << "," << r.c2.str();
        os << "  " << r.verdict << "  " << r.certificate;
        if (r.lambda) os << "  lambda=" << r.lambda->str();
        os << "\n";
    }
    return os.str();
}

std::string rows_to_json(const std::vector<SingularValueRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j;
        j["schema"] = "v1";
        j["group"] = r.group;
        j["c1"] = r.c1.str();
        j["c2"] = r.c2.str();
        j["equal_parameters"] = r.equal_parameters;
        j["verdict"] = r.verdict;
        j["certificate"] = r.certificate;
        if (r.lambda) j["lambda"] = r.lambda->str();
        arr.push_back(j);
    }
    return arr.dump(2);
}

std::vector<lattice::LatticeSummary> lattice_dump(Family family, int N,
                                                  const LatticeDumpOptions& opts) {
    std::vector<lattice::LatticeSummary> rows;
    for (const auto& ot : lattice::enumerate_orbit_types(family, N)) {
        lattice::LatticeSummary row;
        row.orbit_type = ot;
        row.codim = ot.codim();
        row.K = lattice::hyperplane_count(ot);
        if (opts.c1)
            row.kappa = lattice::kappa(ot, *opts.c1, opts.c2.value_or(Rational(0)));
        if (opts.fam) {
            row.m_closed = lattice::m_closed(*opts.fam, ot);
            if (opts.with_brute) row.m_brute = lattice::m_brute(*opts.fam, ot);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string lattice_to_csv(const std::vector<lattice::LatticeSummary>& rows) {
    std::ostringstream os;
    os << "orbit_type,codim,K,kappa,m_closed,m_brute\n";
    for (const auto& r : rows) {
        os << r.orbit_type.str() << "," << r.codim << "," << r.K << ",";
        os << (r.kappa ? r.kappa->str() : "") << ",";
        os << (r.m_closed ? r.m_closed->str() : "") << ",";
        os << (r.m_brute ? std::to_string(*r.m_brute) : "") << "\n";
    }
    return os.str();
}

std::string lattice_to_json(const std::vector<lattice::LatticeSummary>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j;
        j["schema"] = "v1";
        j["orbit_type"] = r.orbit_type.str();
        j["lambda"] = r.orbit_type.lambda.parts;
        j["z"] = r.orbit_type.z;
        j["minus"] = r.orbit_type.minus_flag;
        j["codim"] = r.codim;
        j["K"] = r.K;
        if (r.kappa) j["kappa"] = r.kappa->str();
        if (r.m_closed) j["m_closed"] = r.m_closed->str();
        if (r.m_brute) j["m_brute"] = *r.m_brute;
        arr.push_back(j);
    }
    return arr.dump(2);
}

} // namespace rca::report
