#ifndef RCA_IDEALS_HPP
#define RCA_IDEALS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rca/coxeter.hpp"
#include "rca/poly.hpp"

namespace rca::ideals {

using poly::MultiPoly;

// Weakly decreasing list of positive parts.  The empty partition is allowed
// where a construction calls for it (length 0, sum 0).
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int sum() const;
    int length() const { return static_cast<int>(parts.size()); }
    // nu_j with the zero-padding convention for j >= length (0-based j).
    int part_or_zero(int j) const;

    std::string str() const;
};

bool operator==(const Partition& a, const Partition& b);
bool operator<(const Partition& a, const Partition& b); // lex on parts

// All partitions of n (n >= 0), in descending lex order starting from (n).
std::vector<Partition> partitions_of(int n);
// Partitions of n with at most max_len parts.
std::vector<Partition> partitions_max_length(int n, int max_len);

// The balanced partition nu_N^k = ((q+1)^s, q^{k-s}) with N = kq + s.
Partition balanced_partition(int N, int k);

enum class FamilyTag {
    Ik,             // S_N-images of p_{nu_N^k}(x)
    IkPm,           // S_N-images of p_{nu_N^k}(x^2)
    IkM,            // S_N-images of p_{nu_N^k}(x^m)
    Jk,             // S_N-images of x_1...x_{N-k}
    KnuT,           // S_N-images of p_{nu,T}
    Kks,            // K_{nu_N^k, T_{k,s}}
    Kcal,           // all p_{nu,T} with l(nu) <= k, |T| = s
    PrincipalDelta, // polynomials divisible by prod (alpha, x)
    VanishingAtZero,// the maximal ideal (x_1, ..., x_N)
    Unit            // the whole polynomial ring
};

struct IdealFamily {
    FamilyTag tag = FamilyTag::Ik;
    int N = 0;         // ambient variable count
    int k = 0;
    int s = 0;
    int power = 2;     // m for IkM / KnuT generalizations
    Partition nu;      // KnuT
    std::vector<int> T; // KnuT: 0-based block indices

    std::string str() const;
    // Grammar: "I:k=2", "Ipm:k=3", "Im:k=2,m=3", "J:k=1", "K:k=3,s=1",
    // "Kcal:k=3,s=1", "Delta", "MaxIdeal", "One".
    static IdealFamily parse(const std::string& text, int N);

    static IdealFamily I(int N, int k);
    static IdealFamily Ipm(int N, int k);
    static IdealFamily Im(int N, int k, int m);
    static IdealFamily J(int N, int k);
    static IdealFamily K(int N, int k, int s);
    static IdealFamily KofNuT(int N, Partition nu, std::vector<int> T, int power = 2);
    static IdealFamily KcalOf(int N, int k, int s);
    static IdealFamily Delta(int N);
    static IdealFamily MaxIdeal(int N);
    static IdealFamily UnitIdeal(int N);
};

// p_nu(x^power): product of Vandermonde blocks in consecutive variable
// groups, every variable raised to `power`.
MultiPoly p_nu(const Partition& nu, int N, int power = 1, int coeff_order = 1);

// p_{nu,T}^{(power)}: p_nu(x^power) times the product of all variables in
// the blocks indexed by T (0-based; T may index zero-padded empty blocks).
MultiPoly p_nu_T(const Partition& nu, const std::vector<int>& T, int N, int power = 2,
                 int coeff_order = 1);

// x_1 ... x_{N-k}, the generator of J_k.
MultiPoly monomial_generator(int N, int k);

// Canonical generator representatives (before S_N orbit expansion).
// PrincipalDelta needs the root datum of the acting group.
std::vector<MultiPoly> generators(const IdealFamily& fam,
                                  const coxeter::RootDatum* datum = nullptr);

// Streams the S_N orbit of f (images under variable permutations),
// deduplicated up to sign, in a deterministic order.  The callback returns
// false to stop early.
void for_each_orbit_image(const MultiPoly& f,
                          const std::function<bool(const MultiPoly&)>& fn);

} // namespace rca::ideals

#endif
