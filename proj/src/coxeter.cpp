#include "rca/coxeter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "rca/errors.hpp"

namespace rca::coxeter {

using exact::Cyclotomic;

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::D: return "D";
        case Family::G: return "G";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::F4: return "F4";
        case Family::H3: return "H3";
        case Family::H4: return "H4";
        case Family::I2: return "I2";
    }
    return "?";
}

int GroupSpec::ambient_dim() const {
    switch (family) {
        case Family::A: return rank + 1;
        case Family::B:
        case Family::D:
        case Family::G: return rank;
        default: return rank;
    }
}

bool GroupSpec::is_real() const {
    return family != Family::G || m <= 2;
}

std::string GroupSpec::str() const {
    switch (family) {
        case Family::A:
        case Family::B:
        case Family::D:
            return family_name(family) + std::to_string(rank);
        case Family::G: {
            std::ostringstream os;
            os << "G(" << m << "," << p << "," << rank << ")";
            return os.str();
        }
        case Family::I2: return "I2(" + std::to_string(label) + ")";
        default: return family_name(family);
    }
}

GroupSpec GroupSpec::G(int m, int p, int N) {
    if (m < 1 || p < 1 || m % p != 0)
        throw std::invalid_argument("G(m,p,N) requires p | m");
    if (N < 1) throw std::invalid_argument("G(m,p,N) requires N >= 1");
    return {Family::G, N, m, p, 0};
}

GroupSpec GroupSpec::exceptional(Family f) {
    switch (f) {
        case Family::E6: return {f, 6, 0, 0, 0};
        case Family::E7: return {f, 7, 0, 0, 0};
        case Family::E8: return {f, 8, 0, 0, 0};
        case Family::F4: return {f, 4, 0, 0, 0};
        case Family::H3: return {f, 3, 0, 0, 0};
        case Family::H4: return {f, 4, 0, 0, 0};
        default: throw std::invalid_argument("not an exceptional family");
    }
}

GroupSpec GroupSpec::parse(const std::string& text) {
    if (text == "E6") return exceptional(Family::E6);
    if (text == "E7") return exceptional(Family::E7);
    if (text == "E8") return exceptional(Family::E8);
    if (text == "F4") return exceptional(Family::F4);
    if (text == "H3") return exceptional(Family::H3);
    if (text == "H4") return exceptional(Family::H4);
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("cannot parse group spec '" + text + "'");
    std::string head = text.substr(0, colon);
    std::string tail = text.substr(colon + 1);
    try {
        if (head == "A") return A(std::stoi(tail));
        if (head == "B") return B(std::stoi(tail));
        if (head == "D") return D(std::stoi(tail));
        if (head == "I2") return I2(std::stoi(tail));
        if (head == "G") {
            int m, p, N;
            char sep1, sep2;
            std::istringstream is(tail);
            if (is >> m >> sep1 >> p >> sep2 >> N && sep1 == ',' && sep2 == ',')
                return G(m, p, N);
        }
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("cannot parse group spec '" + text + "'");
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.family == b.family && a.rank == b.rank && a.m == b.m && a.p == b.p &&
           a.label == b.label;
}

namespace {

std::vector<Rational> unit(int dim, int i, Rational v = Rational(1)) {
    std::vector<Rational> r(dim);
    r[i] = v;
    return r;
}

bool positive_by_generic_functional(const std::vector<Rational>& root) {
    // Lexicographic-style generic functional: first nonzero coordinate decides.
    for (const auto& c : root) {
        if (c.is_zero()) continue;
        return c > Rational(0);
    }
    return false;
}

std::vector<std::vector<Rational>> e8_all_roots() {
    std::vector<std::vector<Rational>> roots;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    std::vector<Rational> r(8);
                    r[i] = Rational(si);
                    r[j] = Rational(sj);
                    roots.push_back(r);
                }
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        std::vector<Rational> r(8);
        for (int i = 0; i < 8; ++i)
            r[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
        roots.push_back(r);
    }
    return roots;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

RootDatum build_root_datum(const GroupSpec& spec) {
    RootDatum d;
    d.spec = spec;
    const int N = spec.ambient_dim();

    auto add_transposition = [&](int i, int j) {
        d.reflections.push_back(poly::MonomialMap::transposition(N, i, j));
    };
    auto add_signed_swap = [&](int i, int j) {
        auto m = poly::MonomialMap::transposition(N, i, j);
        m.scale[i] = Cyclotomic(-1);
        m.scale[j] = Cyclotomic(-1);
        d.reflections.push_back(m);
    };
    auto add_sign_flip = [&](int i) {
        auto m = poly::MonomialMap::identity(N);
        m.scale[i] = Cyclotomic(-1);
        d.reflections.push_back(m);
    };

    switch (spec.family) {
        case Family::A: {
            d.root_dim = N;
            for (int i = 0; i < N; ++i)
                for (int j = i + 1; j < N; ++j) {
                    auto r = unit(N, i);
                    r[j] = Rational(-1);
                    d.positive_roots.push_back(r);
                    add_transposition(i, j);
                }
            break;
        }
        case Family::B: {
            d.root_dim = N;
            for (int i = 0; i < N; ++i)
                for (int j = i + 1; j < N; ++j) {
                    auto r = unit(N, i);
                    r[j] = Rational(-1);
                    d.positive_roots.push_back(r);
                    add_transposition(i, j);
                    r[j] = Rational(1);
                    d.positive_roots.push_back(r);
                    add_signed_swap(i, j);
                }
            for (int i = 0; i < N; ++i) {
                d.positive_roots.push_back(unit(N, i));
                add_sign_flip(i);
            }
            break;
        }
        case Family::D: {
            d.root_dim = N;
            for (int i = 0; i < N; ++i)
                for (int j = i + 1; j < N; ++j) {
                    auto r = unit(N, i);
                    r[j] = Rational(-1);
                    d.positive_roots.push_back(r);
                    add_transposition(i, j);
                    r[j] = Rational(1);
                    d.positive_roots.push_back(r);
                    add_signed_swap(i, j);
                }
            break;
        }
        case Family::G: {
            d.root_dim = N;
            const int m = spec.m, p = spec.p;
            long hyperplanes = static_cast<long>(m) * N * (N - 1) / 2;
            if (p < m) hyperplanes += N;
            d.root_count = hyperplanes;
            int order = m <= 2 ? 1 : m;
            for (int i = 0; i < N; ++i)
                for (int j = i + 1; j < N; ++j)
                    for (int k = 0; k < m; ++k) {
                        // s_{ij}^k: x_i -> xi^k x_j, x_j -> xi^{-k} x_i
                        auto mm = poly::MonomialMap::transposition(N, i, j, order);
                        mm.scale[i] = Cyclotomic::root_of_unity(m, k).embedded(order);
                        mm.scale[j] = Cyclotomic::root_of_unity(m, -k).embedded(order);
                        d.reflections.push_back(mm);
                    }
            if (p < m)
                for (int i = 0; i < N; ++i)
                    for (int s = 1; s < m / p; ++s) {
                        auto mm = poly::MonomialMap::identity(N, order);
                        mm.scale[i] =
                            Cyclotomic::root_of_unity(m, static_cast<long>(p) * s).embedded(order);
                        d.reflections.push_back(mm);
                    }
            return d;
        }
        case Family::E6:
        case Family::E7:
        case Family::E8: {
            d.root_dim = 8;
            auto all = e8_all_roots();
            std::vector<Rational> v1 = unit(8, 6);
            v1[7] = Rational(1); // e7 + e8
            std::vector<Rational> v2 = unit(8, 5);
            v2[7] = Rational(1); // e6 + e8
            for (auto& r : all) {
                if (spec.family != Family::E8 && !dot(r, v1).is_zero()) continue;
                if (spec.family == Family::E6 && !dot(r, v2).is_zero()) continue;
                if (positive_by_generic_functional(r)) d.positive_roots.push_back(r);
            }
            break;
        }
        case Family::F4: {
            d.root_dim = 4;
            for (int i = 0; i < 4; ++i) d.positive_roots.push_back(unit(4, i));
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    for (int sj : {1, -1}) {
                        auto r = unit(4, i);
                        r[j] = Rational(sj);
                        d.positive_roots.push_back(r);
                    }
            for (int mask = 0; mask < 8; ++mask) {
                std::vector<Rational> r(4, Rational(1, 2));
                for (int i = 0; i < 3; ++i)
                    if ((mask >> i) & 1) r[i + 1] = Rational(-1, 2);
                d.positive_roots.push_back(r);
            }
            break;
        }
        case Family::H3:
        case Family::H4:
        case Family::I2: {
            // Only counts; coordinates would be irrational.
            d.root_dim = 0;
            d.root_count = positive_root_count(type_of(spec));
            return d;
        }
    }
    d.root_count = static_cast<long>(d.positive_roots.size());
    return d;
}

std::pair<std::vector<int>, int> degrees_and_coxeter_number(const GroupSpec& spec) {
    GroupSpec s = spec;
    if (s.family == Family::G) {
        if (s.m > 2)
            throw std::invalid_argument("degrees are tabulated for Coxeter groups only; " +
                                        spec.str() + " is not one");
        if (s.m == 1) s = GroupSpec::A(s.rank - 1);
        else s = (s.p == 1) ? GroupSpec::B(s.rank) : GroupSpec::D(s.rank);
    }
    ParabolicType type = type_of(s);
    std::vector<int> deg = degrees_of(type);
    int h = *std::max_element(deg.begin(), deg.end());
    // Guard the tables: sum(d_i - 1) must be the reflection count h*rank/2.
    long sum = 0;
    for (int d : deg) sum += d - 1;
    if (sum != positive_root_count(type) || h != coxeter_number(type))
        throw std::logic_error("inconsistent degree table for " + s.str());
    return {deg, h};
}

Diagram diagram(const GroupSpec& spec) {
    Diagram g;
    g.nodes = spec.rank;
    auto edge = [&](int a, int b, int label) { g.edges.push_back({a, b, label}); };
    switch (spec.family) {
        case Family::A:
            for (int i = 0; i + 1 < spec.rank; ++i) edge(i, i + 1, 3);
            break;
        case Family::B:
            for (int i = 0; i + 2 < spec.rank; ++i) edge(i, i + 1, 3);
            if (spec.rank >= 2) edge(spec.rank - 2, spec.rank - 1, 4);
            break;
        case Family::D:
            // Path 0..rank-3 with both rank-2 and rank-1 attached to rank-3.
            for (int i = 0; i + 1 < spec.rank - 2; ++i) edge(i, i + 1, 3);
            if (spec.rank >= 3) {
                edge(spec.rank - 3, spec.rank - 2, 3);
                edge(spec.rank - 3, spec.rank - 1, 3);
            } else if (spec.rank == 2) {
                // D2 = A1 x A1: no edges
            }
            break;
        case Family::E6:
        case Family::E7:
        case Family::E8: {
            int n = spec.rank;
            for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1, 3);
            edge(2, n - 1, 3); // branch node at the third vertex of the long path
            break;
        }
        case Family::F4:
            edge(0, 1, 3);
            edge(1, 2, 4);
            edge(2, 3, 3);
            break;
        case Family::H3:
            edge(0, 1, 5);
            edge(1, 2, 3);
            break;
        case Family::H4:
            edge(0, 1, 5);
            edge(1, 2, 3);
            edge(2, 3, 3);
            break;
        case Family::I2:
            edge(0, 1, spec.label);
            break;
        case Family::G:
            throw std::invalid_argument("no Coxeter diagram for the G family");
    }
    return g;
}

std::string ParabolicType::str() const {
    if (family == Family::I2) return "I2(" + std::to_string(label) + ")";
    switch (family) {
        case Family::A:
        case Family::B:
        case Family::D:
            return family_name(family) + std::to_string(rank);
        default: return family_name(family);
    }
}

bool operator==(const ParabolicType& a, const ParabolicType& b) {
    return a.family == b.family && a.rank == b.rank && a.label == b.label;
}

bool operator<(const ParabolicType& a, const ParabolicType& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.label < b.label;
}

int coxeter_number(const ParabolicType& t) {
    switch (t.family) {
        case Family::A: return t.rank + 1;
        case Family::B: return 2 * t.rank;
        case Family::D: return 2 * t.rank - 2;
        case Family::E6: return 12;
        case Family::E7: return 18;
        case Family::E8: return 30;
        case Family::F4: return 12;
        case Family::H3: return 10;
        case Family::H4: return 30;
        case Family::I2: return t.label;
        case Family::G: break;
    }
    throw std::invalid_argument("no Coxeter number for this type");
}

long positive_root_count(const ParabolicType& t) {
    return static_cast<long>(coxeter_number(t)) * t.rank / 2;
}

std::vector<int> degrees_of(const ParabolicType& t) {
    std::vector<int> d;
    switch (t.family) {
        case Family::A:
            for (int i = 2; i <= t.rank + 1; ++i) d.push_back(i);
            return d;
        case Family::B:
            for (int i = 1; i <= t.rank; ++i) d.push_back(2 * i);
            return d;
        case Family::D:
            for (int i = 1; i < t.rank; ++i) d.push_back(2 * i);
            d.push_back(t.rank);
            std::sort(d.begin(), d.end());
            return d;
        case Family::E6: return {2, 5, 6, 8, 9, 12};
        case Family::E7: return {2, 6, 8, 10, 12, 14, 18};
        case Family::E8: return {2, 8, 12, 14, 18, 20, 24, 30};
        case Family::F4: return {2, 6, 8, 12};
        case Family::H3: return {2, 6, 10};
        case Family::H4: return {2, 12, 20, 30};
        case Family::I2: return {2, t.label};
        case Family::G: break;
    }
    throw std::invalid_argument("no degree table for this type");
}

ParabolicType type_of(const GroupSpec& spec) {
    if (!spec.is_real())
        throw std::invalid_argument("type_of needs a real reflection group");
    if (spec.family == Family::G) {
        if (spec.m == 1) return {Family::A, spec.rank - 1, 0};
        return {spec.p == 1 ? Family::B : Family::D, spec.rank, 0};
    }
    return {spec.family, spec.rank, spec.label};
}

namespace {

// Classify a connected edge-labelled diagram into the finite type catalog.
ParabolicType classify_connected(const std::vector<int>& nodes,
                                 const std::vector<std::array<int, 3>>& edges) {
    int n = static_cast<int>(nodes.size());
    if (n == 1) return {Family::A, 1, 0};

    std::map<int, std::vector<std::pair<int, int>>> adj; // node -> (nbr, label)
    int high_label = 3;
    int high_edges = 0;
    for (const auto& e : edges) {
        adj[e[0]].emplace_back(e[1], e[2]);
        adj[e[1]].emplace_back(e[0], e[2]);
        if (e[2] > 3) {
            high_label = std::max(high_label, e[2]);
            ++high_edges;
        }
    }
    if (n == 2) {
        int label = edges.empty() ? 3 : edges[0][2];
        if (label == 3) return {Family::A, 2, 0};
        if (label == 4) return {Family::B, 2, 0};
        return {Family::I2, 2, label};
    }

    int max_valence = 0;
    for (auto& [v, nb] : adj) max_valence = std::max(max_valence, static_cast<int>(nb.size()));

    if (high_edges > 1 || max_valence > 3)
        throw std::domain_error("diagram outside the finite type catalog");

    if (max_valence <= 2) {
        // A path.
        if (high_edges == 0) return {Family::A, n, 0};
        // Locate the labelled edge: at an end of the path or in the middle.
        const auto* high = &edges[0];
        for (const auto& e : edges)
            if (e[2] > 3) high = &e;
        auto valence = [&](int v) { return static_cast<int>(adj[v].size()); };
        bool at_end = valence((*high)[0]) == 1 || valence((*high)[1]) == 1;
        if (high_label == 4) {
            if (at_end) return {Family::B, n, 0};
            if (n == 4) return {Family::F4, 4, 0};
            throw std::domain_error("unrecognized label-4 diagram");
        }
        if (high_label == 5 && at_end) {
            if (n == 3) return {Family::H3, 3, 0};
            if (n == 4) return {Family::H4, 4, 0};
        }
        throw std::domain_error("unrecognized labelled path diagram");
    }

    // Unique branch node with three simply-laced branches.
    if (high_edges > 0) throw std::domain_error("labelled fork is not of finite type");
    int fork = -1;
    for (auto& [v, nb] : adj)
        if (nb.size() == 3) {
            if (fork >= 0) throw std::domain_error("two fork nodes");
            fork = v;
        }
    std::vector<int> branch_len;
    for (auto& [nbr, label] : adj[fork]) {
        int len = 0;
        int prev = fork, cur = nbr;
        while (true) {
            ++len;
            int next = -1;
            for (auto& [w, l] : adj[cur])
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        branch_len.push_back(len);
    }
    std::sort(branch_len.begin(), branch_len.end());
    if (branch_len[0] == 1 && branch_len[1] == 1) return {Family::D, n, 0};
    if (branch_len[0] == 1 && branch_len[1] == 2) {
        if (branch_len[2] == 2) return {Family::E6, 6, 0};
        if (branch_len[2] == 3) return {Family::E7, 7, 0};
        if (branch_len[2] == 4) return {Family::E8, 8, 0};
    }
    throw std::domain_error("fork diagram outside the finite type catalog");
}

// Connected components of the induced subdiagram on `subset`, classified.
std::vector<ParabolicType> classify_subset(const Diagram& g, unsigned subset) {
    std::vector<ParabolicType> result;
    std::vector<bool> seen(g.nodes, false);
    for (int start = 0; start < g.nodes; ++start) {
        if (!((subset >> start) & 1U) || seen[start]) continue;
        std::vector<int> comp{start};
        seen[start] = true;
        for (size_t head = 0; head < comp.size(); ++head) {
            for (const auto& e : g.edges) {
                int other = -1;
                if (e[0] == comp[head]) other = e[1];
                else if (e[1] == comp[head]) other = e[0];
                if (other < 0 || !((subset >> other) & 1U) || seen[other]) continue;
                seen[other] = true;
                comp.push_back(other);
            }
        }
        std::vector<std::array<int, 3>> comp_edges;
        for (const auto& e : g.edges)
            if (((subset >> e[0]) & 1U) && ((subset >> e[1]) & 1U) &&
                std::find(comp.begin(), comp.end(), e[0]) != comp.end())
                comp_edges.push_back(e);
        result.push_back(classify_connected(comp, comp_edges));
    }
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace

std::vector<std::pair<ParabolicType, int>> irreducible_parabolic_types(const GroupSpec& spec) {
    Diagram g = diagram(spec);
    if (g.nodes > 20) throw std::invalid_argument("diagram too large for subset enumeration");
    std::map<ParabolicType, int> counts;
    unsigned full = (1U << g.nodes) - 1;
    for (unsigned subset = 1; subset < full; ++subset) {
        auto types = classify_subset(g, subset);
        if (types.size() != 1) continue; // connected subdiagrams only
        counts[types[0]] += 1;
    }
    return {counts.begin(), counts.end()};
}

std::vector<std::vector<ParabolicType>> parabolic_type_multisets(const GroupSpec& spec,
                                                                 bool include_full) {
    Diagram g = diagram(spec);
    if (g.nodes > 20) throw std::invalid_argument("diagram too large for subset enumeration");
    std::set<std::vector<ParabolicType>> seen;
    unsigned full = (1U << g.nodes) - 1;
    for (unsigned subset = 1; subset <= full; ++subset) {
        if (subset == full && !include_full) continue;
        seen.insert(classify_subset(g, subset));
    }
    return {seen.begin(), seen.end()};
}

namespace {

bool singular_for_degrees(const std::vector<int>& degrees, const Rational& c) {
    if (c <= Rational(0) || c.is_integer()) return false;
    const auto& den = c.den();
    for (int d : degrees)
        if (exact::Integer(d) % den == 0) return true;
    return false;
}

} // namespace

bool is_singular_value(const GroupSpec& spec, const Rational& c) {
    return singular_for_degrees(degrees_and_coxeter_number(spec).first, c);
}

bool is_singular_value(const ParabolicType& t, const Rational& c) {
    return singular_for_degrees(degrees_of(t), c);
}

} // namespace rca::coxeter
