#include "rca/ideals.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rca/errors.hpp"

namespace rca::ideals {

using exact::Cyclotomic;
using exact::Rational;
using poly::Monomial;

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::sum() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

int Partition::part_or_zero(int j) const {
    return j < length() ? parts[j] : 0;
}

std::string Partition::str() const {
    if (parts.empty()) return "()";
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }

namespace {

void emit_partitions(int n, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        prefix.push_back(p);
        emit_partitions(n - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions of a negative number");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, n, prefix, out);
    return out;
}

std::vector<Partition> partitions_max_length(int n, int max_len) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (p.length() <= max_len) out.push_back(p);
    return out;
}

Partition balanced_partition(int N, int k) {
    if (k < 1 || k >= N) throw std::invalid_argument("balanced_partition needs 1 <= k < N");
    int q = N / k, s = N % k;
    std::vector<int> parts;
    parts.insert(parts.end(), s, q + 1);
    parts.insert(parts.end(), k - s, q);
    return Partition(parts);
}

std::string IdealFamily::str() const {
    std::ostringstream os;
    switch (tag) {
        case FamilyTag::Ik: os << "I:k=" << k; break;
        case FamilyTag::IkPm: os << "Ipm:k=" << k; break;
        case FamilyTag::IkM: os << "Im:k=" << k << ",m=" << power; break;
        case FamilyTag::Jk: os << "J:k=" << k; break;
        case FamilyTag::Kks: os << "K:k=" << k << ",s=" << s; break;
        case FamilyTag::Kcal: os << "Kcal:k=" << k << ",s=" << s; break;
        case FamilyTag::KnuT: {
            os << "KnuT:nu=" << nu.str() << ",T={";
            for (size_t i = 0; i < T.size(); ++i) os << (i ? "," : "") << T[i] + 1;
            os << "},m=" << power;
            break;
        }
        case FamilyTag::PrincipalDelta: os << "Delta"; break;
        case FamilyTag::VanishingAtZero: os << "MaxIdeal"; break;
        case FamilyTag::Unit: os << "One"; break;
    }
    return os.str();
}

namespace {

int parse_field(const std::string& args, const std::string& key) {
    auto pos = args.find(key + "=");
    if (pos == std::string::npos)
        throw std::invalid_argument("family descriptor missing '" + key + "='");
    return std::stoi(args.substr(pos + key.size() + 1));
}

} // namespace

IdealFamily IdealFamily::parse(const std::string& text, int N) {
    if (text == "Delta") return Delta(N);
    if (text == "MaxIdeal") return MaxIdeal(N);
    if (text == "One") return UnitIdeal(N);
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("cannot parse family descriptor '" + text + "'");
    std::string head = text.substr(0, colon);
    std::string args = text.substr(colon + 1);
    if (head == "I") return I(N, parse_field(args, "k"));
    if (head == "Ipm") return Ipm(N, parse_field(args, "k"));
    if (head == "Im") return Im(N, parse_field(args, "k"), parse_field(args, "m"));
    if (head == "J") return J(N, parse_field(args, "k"));
    if (head == "K") return K(N, parse_field(args, "k"), parse_field(args, "s"));
    if (head == "Kcal") return KcalOf(N, parse_field(args, "k"), parse_field(args, "s"));
    throw std::invalid_argument("unknown family '" + head + "'");
}

IdealFamily IdealFamily::I(int N, int k) {
    if (k < 1 || k >= N) throw std::invalid_argument("I_k needs 1 <= k < N");
    IdealFamily f;
    f.tag = FamilyTag::Ik;
    f.N = N;
    f.k = k;
    f.power = 1;
    return f;
}

IdealFamily IdealFamily::Ipm(int N, int k) {
    IdealFamily f = I(N, k);
    f.tag = FamilyTag::IkPm;
    f.power = 2;
    return f;
}

IdealFamily IdealFamily::Im(int N, int k, int m) {
    if (m < 1) throw std::invalid_argument("I_k^(m) needs m >= 1");
    IdealFamily f = I(N, k);
    f.tag = FamilyTag::IkM;
    f.power = m;
    return f;
}

IdealFamily IdealFamily::J(int N, int k) {
    if (k < 0 || k > N - 1) throw std::invalid_argument("J_k needs 0 <= k <= N-1");
    IdealFamily f;
    f.tag = FamilyTag::Jk;
    f.N = N;
    f.k = k;
    return f;
}

IdealFamily IdealFamily::K(int N, int k, int s) {
    if (k < 1 || k >= N) throw std::invalid_argument("K_{k,s} needs 1 <= k < N");
    if (s < 0 || s > k) throw std::invalid_argument("K_{k,s} needs 0 <= s <= k");
    IdealFamily f;
    f.tag = FamilyTag::Kks;
    f.N = N;
    f.k = k;
    f.s = s;
    f.power = 2;
    return f;
}

IdealFamily IdealFamily::KofNuT(int N, Partition nu, std::vector<int> T, int power) {
    if (nu.sum() != N) throw std::invalid_argument("K_{nu,T} needs |nu| = N");
    std::sort(T.begin(), T.end());
    for (size_t i = 0; i < T.size(); ++i) {
        if (T[i] < 0) throw std::invalid_argument("T indices must be nonnegative");
        if (i > 0 && T[i] == T[i - 1]) throw std::invalid_argument("T indices must be distinct");
    }
    IdealFamily f;
    f.tag = FamilyTag::KnuT;
    f.N = N;
    f.nu = std::move(nu);
    f.T = std::move(T);
    f.power = power;
    return f;
}

IdealFamily IdealFamily::KcalOf(int N, int k, int s) {
    if (k < 1) throw std::invalid_argument("Kcal_{k,s} needs k >= 1");
    if (s < 0 || s > k) throw std::invalid_argument("Kcal_{k,s} needs 0 <= s <= k");
    IdealFamily f;
    f.tag = FamilyTag::Kcal;
    f.N = N;
    f.k = k;
    f.s = s;
    f.power = 2;
    return f;
}

IdealFamily IdealFamily::Delta(int N) {
    IdealFamily f;
    f.tag = FamilyTag::PrincipalDelta;
    f.N = N;
    return f;
}

IdealFamily IdealFamily::MaxIdeal(int N) {
    IdealFamily f;
    f.tag = FamilyTag::VanishingAtZero;
    f.N = N;
    return f;
}

IdealFamily IdealFamily::UnitIdeal(int N) {
    IdealFamily f;
    f.tag = FamilyTag::Unit;
    f.N = N;
    return f;
}

namespace {

std::vector<std::vector<int>> consecutive_blocks(const Partition& nu) {
    std::vector<std::vector<int>> blocks;
    int next = 0;
    for (int part : nu.parts) {
        std::vector<int> block(part);
        for (int i = 0; i < part; ++i) block[i] = next++;
        blocks.push_back(std::move(block));
    }
    return blocks;
}

} // namespace

MultiPoly p_nu(const Partition& nu, int N, int power, int coeff_order) {
    if (nu.sum() != N) throw std::invalid_argument("p_nu needs a partition of N");
    if (power < 1) throw std::invalid_argument("p_nu needs power >= 1");
    MultiPoly r = MultiPoly::constant(N, Cyclotomic::one(coeff_order));
    for (const auto& block : consecutive_blocks(nu))
        r = r * poly::vandermonde(N, block, coeff_order, power);
    return r;
}

MultiPoly p_nu_T(const Partition& nu, const std::vector<int>& T, int N, int power,
                 int coeff_order) {
    MultiPoly r = p_nu(nu, N, power, coeff_order);
    auto blocks = consecutive_blocks(nu);
    for (int t : T) {
        if (t < 0) throw std::invalid_argument("T index out of range");
        if (t >= nu.length()) continue; // zero-padded block: empty product
        for (int v : blocks[t]) r = r * MultiPoly::variable(N, v, coeff_order);
    }
    return r;
}

MultiPoly monomial_generator(int N, int k) {
    if (k < 0 || k > N - 1) throw std::invalid_argument("monomial generator needs 0 <= k <= N-1");
    Monomial m(N, 0);
    for (int i = 0; i < N - k; ++i) m[i] = 1;
    return MultiPoly::term(m, Cyclotomic::one(1));
}

std::vector<MultiPoly> generators(const IdealFamily& fam, const coxeter::RootDatum* datum) {
    const int N = fam.N;
    switch (fam.tag) {
        case FamilyTag::Ik:
            return {p_nu(balanced_partition(N, fam.k), N, 1)};
        case FamilyTag::IkPm:
            return {p_nu(balanced_partition(N, fam.k), N, 2)};
        case FamilyTag::IkM:
            return {p_nu(balanced_partition(N, fam.k), N, fam.power)};
        case FamilyTag::Jk:
            return {monomial_generator(N, fam.k)};
        case FamilyTag::KnuT:
            return {p_nu_T(fam.nu, fam.T, N, fam.power)};
        case FamilyTag::Kks: {
            // T_{k,s} = {k, k-1, ..., k-s+1} in 1-based block labels.
            std::vector<int> T;
            for (int i = 0; i < fam.s; ++i) T.push_back(fam.k - 1 - i);
            return {p_nu_T(balanced_partition(N, fam.k), T, N, 2)};
        }
        case FamilyTag::Kcal: {
            // All p_{nu,T} with l(nu) <= k, |T| = s; representatives are
            // deduplicated by the multiset of block sizes selected by T.
            std::vector<MultiPoly> gens;
            for (const auto& nu : partitions_max_length(N, fam.k)) {
                std::set<std::vector<int>> chosen_size_multisets;
                std::vector<int> idx(fam.k);
                for (int i = 0; i < fam.k; ++i) idx[i] = i;
                // Subsets of {0..k-1} of size s.
                std::vector<int> comb(fam.s);
                std::function<void(int, int)> rec = [&](int start, int depth) {
                    if (depth == fam.s) {
                        std::vector<int> sizes;
                        for (int t : comb) sizes.push_back(nu.part_or_zero(t));
                        std::sort(sizes.begin(), sizes.end());
                        if (chosen_size_multisets.insert(sizes).second)
                            gens.push_back(p_nu_T(nu, comb, N, 2));
                        return;
                    }
                    for (int v = start; v < fam.k; ++v) {
                        comb[depth] = v;
                        rec(v + 1, depth + 1);
                    }
                };
                rec(0, 0);
            }
            return gens;
        }
        case FamilyTag::PrincipalDelta: {
            if (datum == nullptr || datum->positive_roots.empty())
                throw std::invalid_argument("PrincipalDelta needs explicit root data");
            MultiPoly r = MultiPoly::constant(N, Cyclotomic::one(1));
            for (const auto& root : datum->positive_roots) {
                if (static_cast<int>(root.size()) != N)
                    throw std::invalid_argument("root dimension does not match N");
                r = r * poly::LinearForm::from_rationals(root).to_poly(1);
            }
            return {r};
        }
        case FamilyTag::VanishingAtZero: {
            std::vector<MultiPoly> gens;
            for (int i = 0; i < N; ++i) gens.push_back(MultiPoly::variable(N, i));
            return gens;
        }
        case FamilyTag::Unit:
            return {MultiPoly::constant(N, Cyclotomic::one(1))};
    }
    throw std::invalid_argument("unknown family tag");
}

void for_each_orbit_image(const MultiPoly& f,
                          const std::function<bool(const MultiPoly&)>& fn) {
    const int N = f.nvars();
    std::vector<int> perm(N);
    for (int i = 0; i < N; ++i) perm[i] = i;
    std::set<std::string> seen;
    do {
        poly::MonomialMap mm;
        mm.target = perm;
        mm.scale.assign(N, Cyclotomic::one(f.coeff_order()));
        MultiPoly image = poly::apply_monomial_map(f, mm);
        // Dedup up to sign via a canonical representative.
        MultiPoly canon = image;
        if (!canon.is_zero()) {
            auto [mono, coeff] = canon.leading_term();
            if (coeff.is_rational() && coeff.as_rational() < Rational(0)) canon = -canon;
        }
        if (!seen.insert(canon.str()).second) continue;
        if (!fn(image)) return;
    } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace rca::ideals
