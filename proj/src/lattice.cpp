#include "rca/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "rca/errors.hpp"

namespace rca::lattice {

using exact::Cyclotomic;
using ideals::FamilyTag;

std::string OrbitType::str() const {
    std::ostringstream os;
    os << coxeter::family_name(family) << ":" << lambda.str();
    if (minus_flag) os << "-";
    os << ",z=" << z;
    return os.str();
}

bool operator==(const OrbitType& a, const OrbitType& b) {
    return a.family == b.family && a.lambda == b.lambda && a.z == b.z &&
           a.minus_flag == b.minus_flag;
}

bool operator<(const OrbitType& a, const OrbitType& b) {
    if (a.z != b.z) return a.z < b.z;
    if (!(a.lambda == b.lambda)) return b.lambda < a.lambda; // descending lex
    return a.minus_flag < b.minus_flag;
}

std::vector<OrbitType> enumerate_orbit_types(Family family, int N) {
    if (family != Family::A && family != Family::B && family != Family::D)
        throw std::invalid_argument("orbit types exist for the A/B/D arrangements only");
    if (N < 2) throw std::invalid_argument("enumerate_orbit_types needs N >= 2");
    std::vector<OrbitType> out;
    auto push = [&](Partition lambda, int z, bool minus) {
        if (z == 0 && lambda.length() == N) return; // ambient space
        out.push_back({family, std::move(lambda), z, minus});
    };
    if (family == Family::A) {
        for (auto& lambda : ideals::partitions_of(N))
            if (lambda.parts[0] > 1) push(lambda, 0, false);
        return out;
    }
    for (int z = 0; z <= N; ++z) {
        if (family == Family::D && z == 1) continue;
        for (auto& lambda : ideals::partitions_of(N - z)) {
            push(lambda, z, false);
            if (family == Family::D && z == 0 && N % 2 == 0 && lambda.length() < N)
                push(lambda, 0, true);
        }
    }
    return out;
}

long hyperplane_count(const OrbitType& ot) {
    long pairs = 0;
    for (int part : ot.lambda.parts) pairs += static_cast<long>(part) * (part - 1) / 2;
    switch (ot.family) {
        case Family::A: return pairs;
        case Family::D: return pairs + static_cast<long>(ot.z) * (ot.z - 1);
        case Family::B:
            return pairs + static_cast<long>(ot.z) * (ot.z - 1) + ot.z;
        default: throw std::invalid_argument("bad orbit-type family");
    }
}

Rational kappa(const OrbitType& ot, const Rational& c1, const Rational& c2) {
    Rational pairs(0);
    for (int part : ot.lambda.parts) pairs += Rational(part) * Rational(part - 1, 2);
    switch (ot.family) {
        case Family::A: return c1 * pairs;
        case Family::D:
            return c1 * (pairs + Rational(ot.z) * Rational(ot.z - 1));
        case Family::B:
            return c1 * (pairs + Rational(ot.z) * Rational(ot.z - 1)) + c2 * Rational(ot.z);
        default: throw std::invalid_argument("bad orbit-type family");
    }
}

namespace {

void require_bd(const IdealFamily& fam, const OrbitType& ot, const char* name) {
    if (ot.family != Family::B && ot.family != Family::D)
        throw std::invalid_argument(std::string(name) + " multiplicities need a B or D orbit type; " +
                                    "got " + ot.str());
    if (fam.N != ot.N())
        throw std::invalid_argument("family and orbit type disagree on N");
}

Rational sum_mu(int cols, const Partition& lambda) {
    Rational s(0);
    for (int part : lambda.parts) s += estimates::mu_closed(cols, part);
    return s;
}

Rational mu_tilde_exact(int a, int b, long z) {
    return estimates::mu_tilde_split(a, b, z);
}

} // namespace

Rational m_closed(const IdealFamily& fam, const OrbitType& ot) {
    switch (fam.tag) {
        case FamilyTag::Ik: {
            if (ot.family != Family::A)
                throw std::invalid_argument("I_k multiplicities are tabulated for type A flats");
            if (fam.N != ot.N())
                throw std::invalid_argument("family and orbit type disagree on N");
            return sum_mu(fam.k, ot.lambda);
        }
        case FamilyTag::IkPm:
        case FamilyTag::IkM: {
            if (fam.tag == FamilyTag::IkM && fam.power != 2)
                throw std::invalid_argument("closed forms cover the squared-variable case only");
            require_bd(fam, ot, "I_k^pm");
            return sum_mu(fam.k, ot.lambda) +
                   Rational(2) * estimates::mu_closed(fam.k, ot.z);
        }
        case FamilyTag::Jk: {
            require_bd(fam, ot, "J_k");
            return Rational(std::max(0L, static_cast<long>(ot.z) - fam.k));
        }
        case FamilyTag::Kks:
        case FamilyTag::Kcal: {
            require_bd(fam, ot, "K_{k,s}");
            return sum_mu(fam.k, ot.lambda) +
                   mu_tilde_exact(fam.s, fam.k - fam.s, ot.z);
        }
        case FamilyTag::PrincipalDelta:
            return Rational(hyperplane_count(ot));
        case FamilyTag::VanishingAtZero:
            return Rational(ot.z == ot.N() ? 1 : 0);
        case FamilyTag::Unit:
            return Rational(0);
        case FamilyTag::KnuT:
            throw std::invalid_argument("no closed multiplicity form for K_{nu,T}; use m_brute");
    }
    throw std::invalid_argument("unknown family tag");
}

bool m_closed_is_exact(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Kks: return false; // certified lower bound via the Kcal inclusion
        case FamilyTag::KnuT: return false;
        default: return true;
    }
}

namespace {

// Exact multiplicity of the S_N orbit of one block generator (nu, T, power)
// along the representative flat of `ot`: minimize the vanishing order over
// all assignments of lambda-block and zero variables to generator blocks.
// Column sums are constrained to the actual block sizes nu_j.
long min_cost_assignment(const Partition& nu, int cols, const std::vector<int>& T,
                         int power, const OrbitType& ot) {
    const auto& lambda = ot.lambda.parts;
    const int l = static_cast<int>(lambda.size());
    std::vector<char> in_T(cols, 0);
    for (int t : T)
        if (t < cols) in_T[t] = 1;

    std::vector<int> remaining(lambda.begin(), lambda.end());
    int rem_z = ot.z;
    long best = -1;

    // Per column, distribute nu_j among the lambda rows and the zero row.
    std::function<void(int, long)> per_column = [&](int col, long cost) {
        if (best >= 0 && cost >= best) return;
        if (col == cols) {
            best = (best < 0) ? cost : std::min(best, cost);
            return;
        }
        int need = col < nu.length() ? nu.parts[col] : 0;
        // Choose a_0..a_{l-1} and zeta with sum = need.
        std::function<void(int, int, long)> per_row = [&](int row, int left, long c) {
            if (best >= 0 && c >= best) return;
            if (row == l) {
                if (left > rem_z) return;
                int zeta = left;
                long zc = static_cast<long>(zeta) * (zeta - 1);
                if (power == 1) zc = static_cast<long>(zeta) * (zeta - 1) / 2;
                long add = zc + (in_T[col] ? zeta : 0);
                rem_z -= zeta;
                per_column(col + 1, c + add);
                rem_z += zeta;
                return;
            }
            int cap = std::min(left, remaining[row]);
            for (int a = 0; a <= cap; ++a) {
                remaining[row] -= a;
                per_row(row + 1, left - a, c + static_cast<long>(a) * (a - 1) / 2);
                remaining[row] += a;
            }
        };
        per_row(0, need, cost);
    };
    per_column(0, 0);
    if (best < 0) throw std::domain_error("no admissible assignment (block sizes inconsistent)");
    return best;
}

} // namespace

long m_brute(const IdealFamily& fam, const OrbitType& ot, int cap) {
    const int N = ot.N();
    if (fam.N != N) throw std::invalid_argument("family and orbit type disagree on N");
    if (N > cap)
        throw BruteCapError("assignment search capped at N <= " + std::to_string(cap));
    switch (fam.tag) {
        case FamilyTag::Ik: {
            if (ot.family != Family::A)
                throw std::invalid_argument("I_k multiplicities are tabulated for type A flats");
            return min_cost_assignment(ideals::balanced_partition(N, fam.k), fam.k, {}, 1, ot);
        }
        case FamilyTag::IkPm:
            require_bd(fam, ot, "I_k^pm");
            return min_cost_assignment(ideals::balanced_partition(N, fam.k), fam.k, {}, 2, ot);
        case FamilyTag::IkM:
            if (fam.power != 2)
                throw std::invalid_argument("assignment model covers the squared case only");
            require_bd(fam, ot, "I_k^(m)");
            return min_cost_assignment(ideals::balanced_partition(N, fam.k), fam.k, {}, 2, ot);
        case FamilyTag::Kks: {
            require_bd(fam, ot, "K_{k,s}");
            std::vector<int> T;
            for (int i = 0; i < fam.s; ++i) T.push_back(fam.k - 1 - i);
            return min_cost_assignment(ideals::balanced_partition(N, fam.k), fam.k, T, 2, ot);
        }
        case FamilyTag::KnuT:
            if (fam.power != 2)
                throw std::invalid_argument("assignment model covers the squared case only");
            require_bd(fam, ot, "K_{nu,T}");
            return min_cost_assignment(fam.nu, std::max(fam.k, fam.nu.length()), fam.T, 2, ot);
        case FamilyTag::Kcal: {
            require_bd(fam, ot, "Kcal_{k,s}");
            long best = -1;
            for (const auto& nu : ideals::partitions_max_length(N, fam.k)) {
                // Subsets of columns of size s, deduplicated by selected sizes.
                std::set<std::vector<int>> seen;
                std::vector<int> comb(fam.s);
                std::function<void(int, int)> rec = [&](int start, int depth) {
                    if (depth == fam.s) {
                        std::vector<int> sizes;
                        for (int t : comb) sizes.push_back(nu.part_or_zero(t));
                        std::sort(sizes.begin(), sizes.end());
                        if (!seen.insert(sizes).second) return;
                        long v = min_cost_assignment(nu, fam.k, comb, 2, ot);
                        best = best < 0 ? v : std::min(best, v);
                        return;
                    }
                    for (int v = start; v < fam.k; ++v) {
                        comb[depth] = v;
                        rec(v + 1, depth + 1);
                    }
                };
                rec(0, 0);
            }
            return best;
        }
        case FamilyTag::Jk: {
            require_bd(fam, ot, "J_k");
            // Monomial x_1...x_{N-k}: pick the variables avoiding the zero set.
            return std::max(0L, static_cast<long>(ot.z) - fam.k);
        }
        case FamilyTag::PrincipalDelta:
            return hyperplane_count(ot);
        case FamilyTag::VanishingAtZero:
            return ot.z == N ? 1 : 0;
        case FamilyTag::Unit:
            return 0;
    }
    throw std::invalid_argument("unknown family tag");
}

poly::AdaptedFrame representative_frame(const OrbitType& ot) {
    const int N = ot.N();
    poly::AdaptedFrame frame;
    frame.substitution = poly::Matrix::identity(N, 1);
    frame.is_normal.assign(N, 1);
    int var = 0;
    bool first_block = true;
    for (int part : ot.lambda.parts) {
        int anchor = var;
        frame.is_normal[anchor] = 0;
        if (ot.minus_flag && first_block)
            frame.substitution.at(anchor, anchor) = Cyclotomic(-1);
        for (int j = 1; j < part; ++j) {
            // x_{anchor+j} = t_anchor + u_{anchor+j}
            frame.substitution.at(anchor + j, anchor) = Cyclotomic(1);
        }
        var += part;
        first_block = false;
    }
    // The trailing z variables stay pure normals.
    return frame;
}

long m_brute_expansion(const IdealFamily& fam, const OrbitType& ot, int cap) {
    const int N = ot.N();
    if (N > cap)
        throw BruteCapError("orbit expansion capped at N <= " + std::to_string(cap));
    const coxeter::RootDatum* datum_ptr = nullptr;
    coxeter::RootDatum datum;
    if (fam.tag == FamilyTag::PrincipalDelta) {
        coxeter::GroupSpec spec;
        switch (ot.family) {
            case Family::A: spec = coxeter::GroupSpec::A(N - 1); break;
            case Family::B: spec = coxeter::GroupSpec::B(N); break;
            case Family::D: spec = coxeter::GroupSpec::D(N); break;
            default: throw std::invalid_argument("bad orbit-type family");
        }
        datum = coxeter::build_root_datum(spec);
        datum_ptr = &datum;
    }
    poly::AdaptedFrame frame = representative_frame(ot);
    long best = -1;
    for (const auto& gen : ideals::generators(fam, datum_ptr)) {
        ideals::for_each_orbit_image(gen, [&](const poly::MultiPoly& image) {
            long v = poly::multiplicity_along(image, frame);
            best = best < 0 ? v : std::min(best, v);
            return best != 0;
        });
        if (best == 0) break;
    }
    return best;
}

namespace {

using Row = std::vector<Rational>;

// Reduced row echelon form; rows are normalized with leading 1 and sorted by
// pivot column.  Zero rows are dropped.
std::vector<Row> rref(std::vector<Row> rows) {
    if (rows.empty()) return rows;
    const int n = static_cast<int>(rows[0].size());
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!rows[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        Rational inv = Rational(1) / rows[rank][col];
        for (auto& v : rows[rank]) v *= inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Rational f = rows[r][col];
            for (int j = 0; j < n; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

std::string key_of(const std::vector<Row>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        for (const auto& v : r) os << v.str() << ",";
        os << ";";
    }
    return os.str();
}

bool in_span(const std::vector<Row>& rref_rows, Row v) {
    const int n = static_cast<int>(v.size());
    for (const auto& row : rref_rows) {
        int pivot = -1;
        for (int j = 0; j < n; ++j)
            if (!row[j].is_zero()) { pivot = j; break; }
        if (pivot < 0) continue;
        if (v[pivot].is_zero()) continue;
        Rational f = v[pivot];
        for (int j = 0; j < n; ++j) v[j] -= f * row[j];
    }
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

std::vector<Row> arrangement_covectors(Family family, int N) {
    std::vector<Row> cov;
    auto unit_pair = [&](int i, int j, int sign) {
        Row r(N);
        r[i] = Rational(1);
        r[j] = Rational(sign);
        return r;
    };
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            cov.push_back(unit_pair(i, j, -1));
            if (family != Family::A) cov.push_back(unit_pair(i, j, 1));
        }
    if (family == Family::B)
        for (int i = 0; i < N; ++i) {
            Row r(N);
            r[i] = Rational(1);
            cov.push_back(r);
        }
    return cov;
}

// Classify the flat with equation span E (given in RREF) into an OrbitType.
OrbitType classify_flat(Family family, int N, const std::vector<Row>& E) {
    std::vector<char> zero(N, 0);
    if (family != Family::A)
        for (int i = 0; i < N; ++i) {
            Row e(N);
            e[i] = Rational(1);
            zero[i] = in_span(E, e);
        }
    std::vector<int> comp(N, -1);
    std::vector<int> sign(N, 1);
    int ncomp = 0;
    for (int i = 0; i < N; ++i) {
        if (zero[i] || comp[i] >= 0) continue;
        comp[i] = ncomp;
        sign[i] = 1;
        // Grow the component by scanning linked variables.
        std::vector<int> stack{i};
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b = 0; b < N; ++b) {
                if (zero[b] || comp[b] >= 0 || b == a) continue;
                Row diff(N), sum(N);
                diff[a] = Rational(1);
                diff[b] = Rational(-1);
                sum[a] = Rational(1);
                sum[b] = Rational(1);
                bool plus_link = in_span(E, diff);
                bool minus_link = family != Family::A && in_span(E, sum);
                if (!plus_link && !minus_link) continue;
                comp[b] = comp[a];
                sign[b] = plus_link ? sign[a] : -sign[a];
                stack.push_back(b);
            }
        }
        ++ncomp;
    }
    std::vector<int> sizes(ncomp, 0);
    for (int i = 0; i < N; ++i)
        if (!zero[i]) ++sizes[comp[i]];
    int z = static_cast<int>(std::count(zero.begin(), zero.end(), 1));
    std::vector<int> lambda = sizes;
    std::sort(lambda.begin(), lambda.end(), std::greater<int>());
    if (static_cast<int>(E.size()) != N - ncomp)
        throw std::domain_error("flat does not decompose into sign-linked blocks");

    bool minus = false;
    if (family == Family::D && z == 0) {
        bool all_even = std::all_of(lambda.begin(), lambda.end(),
                                    [](int p) { return p % 2 == 0; });
        if (all_even) {
            // Normalize every component so its first variable has sign +1,
            // then total minus-sign parity is the orbit invariant.
            std::vector<int> first(ncomp, -1);
            for (int i = 0; i < N; ++i)
                if (first[comp[i]] < 0) first[comp[i]] = i;
            long minuses = 0;
            for (int i = 0; i < N; ++i)
                if (sign[i] * sign[first[comp[i]]] < 0) ++minuses;
            minus = (minuses % 2) == 1;
        }
    }
    return {family, Partition(lambda), z, minus};
}

} // namespace

std::map<std::string, long> explicit_lattice_counts(Family family, int N) {
    if (N > 4) throw std::invalid_argument("explicit lattice enumeration is capped at N <= 4");
    auto cov = arrangement_covectors(family, N);
    std::map<std::string, std::vector<Row>> flats;
    std::vector<std::string> frontier;
    for (const auto& c : cov) {
        auto r = rref({c});
        auto key = key_of(r);
        if (flats.emplace(key, r).second) frontier.push_back(key);
    }
    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (const auto& key : frontier) {
            auto base = flats[key];
            for (const auto& c : cov) {
                if (in_span(base, c)) continue;
                auto grown = base;
                grown.push_back(c);
                grown = rref(std::move(grown));
                auto gkey = key_of(grown);
                if (flats.emplace(gkey, grown).second) next.push_back(gkey);
            }
        }
        frontier = std::move(next);
    }
    std::map<std::string, long> counts;
    for (const auto& [key, rows] : flats) {
        OrbitType ot = classify_flat(family, N, rows);
        counts[ot.str()] += 1;
    }
    return counts;
}

OrbitType delegate_minus(const OrbitType& ot) {
    if (!ot.minus_flag) return ot;
    bool all_even = std::all_of(ot.lambda.parts.begin(), ot.lambda.parts.end(),
                                [](int p) { return p % 2 == 0; });
    if (all_even) return ot; // genuinely distinct orbit
    OrbitType plus = ot;
    plus.minus_flag = false;
    return plus;
}

} // namespace rca::lattice
