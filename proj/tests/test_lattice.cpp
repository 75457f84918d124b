#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "rca/lattice.hpp"

using namespace rca::lattice;
using rca::coxeter::Family;
using rca::exact::Rational;
using rca::ideals::IdealFamily;
using rca::ideals::Partition;

TEST_CASE("orbit type enumeration for the A arrangement") {
    auto types = enumerate_orbit_types(Family::A, 3);
    REQUIRE(types.size() == 2);
    CHECK(types[0].lambda == Partition({3}));
    CHECK(types[1].lambda == Partition({2, 1}));
    for (const auto& t : types) CHECK(t.z == 0);
}

TEST_CASE("orbit type enumeration for B excludes the ambient space") {
    auto types = enumerate_orbit_types(Family::B, 2);
    std::set<std::string> names;
    for (const auto& t : types) names.insert(t.str());
    CHECK(names == std::set<std::string>{"B:(2),z=0", "B:(1),z=1", "B:(),z=2"});
}

TEST_CASE("D enumeration skips z = 1 and pairs minus twins at even N") {
    auto d4 = enumerate_orbit_types(Family::D, 4);
    long minus = 0, plus_z0 = 0;
    for (const auto& t : d4) {
        CHECK(t.z != 1);
        if (t.z == 0 && t.minus_flag) ++minus;
        if (t.z == 0 && !t.minus_flag) ++plus_z0;
    }
    CHECK(minus == plus_z0); // sign-flip bijection
    auto d5 = enumerate_orbit_types(Family::D, 5);
    for (const auto& t : d5) {
        CHECK_FALSE(t.minus_flag);
        CHECK(t.z != 1);
    }
}

TEST_CASE("codim and hyperplane counts") {
    OrbitType a{Family::A, Partition({3}), 0, false};
    CHECK(a.codim() == 2);
    CHECK(hyperplane_count(a) == 3);
    CHECK(kappa(a, Rational(1, 3)) == Rational(1));

    OrbitType d{Family::D, Partition({2, 2}), 0, false};
    CHECK(hyperplane_count(d) == 2);
    CHECK(kappa(d, Rational(1, 4)) == Rational(1, 2));

    OrbitType b{Family::B, Partition({1, 1, 1}), 3, false};
    CHECK(b.N() == 6);
    CHECK(b.codim() == 3);
    // 6 pair hyperplanes within the zero set, 3 coordinate hyperplanes
    CHECK(hyperplane_count(b) == 9);
    CHECK(kappa(b, Rational(1, 4), Rational(1, 4)) == Rational(9, 4));
}

TEST_CASE("closed multiplicity forms") {
    // I_2 on the full diagonal of R^3: mu_{2,3} = 1
    OrbitType a{Family::A, Partition({3}), 0, false};
    CHECK(m_closed(IdealFamily::I(3, 2), a) == Rational(1));

    // J_2 at z = 4 in B_6
    OrbitType b{Family::B, Partition({1, 1}), 4, false};
    CHECK(m_closed(IdealFamily::J(6, 2), b) == Rational(2));

    // Ipm_2 on ((1), z=2) in D_3: mu_{2,1} + 2 mu_{2,2} = 0; the image
    // x1^2 - x2^2 restricts to t^2 - u^2, which does not vanish.
    OrbitType d{Family::D, Partition({1}), 2, false};
    CHECK(m_closed(IdealFamily::Ipm(3, 2), d) == Rational(0));
    CHECK(m_brute_expansion(IdealFamily::Ipm(3, 2), d) == 0);

    // Delta and the maximal ideal
    OrbitType o{Family::B, Partition(), 3, false};
    CHECK(m_closed(IdealFamily::Delta(3), o) == Rational(hyperplane_count(o)));
    CHECK(m_closed(IdealFamily::MaxIdeal(3), o) == Rational(1));
    CHECK(m_closed(IdealFamily::MaxIdeal(3), d) == Rational(0));
    CHECK(m_closed(IdealFamily::UnitIdeal(3), d) == Rational(0));

    // family/orbit-type mismatches are rejected
    CHECK_THROWS(m_closed(IdealFamily::I(3, 2), d));
    CHECK_THROWS(m_closed(IdealFamily::J(4, 2), b));
}

TEST_CASE("representative frames realize the stated multiplicities") {
    // I_1 in R^2 on the diagonal: generator x1 - x2 vanishes to order 1.
    OrbitType a{Family::A, Partition({2}), 0, false};
    CHECK(m_brute_expansion(IdealFamily::I(2, 1), a) == 1);

    // Ipm_2 on the full diagonal of D_3: every image x_a^2 - x_b^2 factors
    // as (x_a - x_b)(x_a + x_b) and only the difference vanishes, so the
    // minimum over images is mu_{2,3} = 1.
    OrbitType d{Family::D, Partition({3}), 0, false};
    CHECK(m_brute_expansion(IdealFamily::Ipm(3, 2), d) == 1);
    CHECK(m_brute(IdealFamily::Ipm(3, 2), d) == 1);
    CHECK(m_closed(IdealFamily::Ipm(3, 2), d) == Rational(1));
}

TEST_CASE("composition model equals polynomial expansion") {
    for (int N = 2; N <= 4; ++N) {
        // type A with I_k
        for (const auto& ot : enumerate_orbit_types(Family::A, N))
            for (int k = 1; k <= N - 1; ++k) {
                CAPTURE(N);
                CAPTURE(k);
                CAPTURE(ot.str());
                auto fam = IdealFamily::I(N, k);
                CHECK(m_brute(fam, ot) == m_brute_expansion(fam, ot));
            }
        // types B/D with the squared families
        for (Family family : {Family::B, Family::D})
            for (const auto& ot : enumerate_orbit_types(family, N)) {
                for (int k = 1; k <= N - 1; ++k) {
                    auto fam = IdealFamily::Ipm(N, k);
                    CAPTURE(ot.str());
                    CAPTURE(k);
                    CHECK(m_brute(fam, ot) == m_brute_expansion(fam, ot));
                    for (int s = 0; s <= k; ++s) {
                        auto kfam = IdealFamily::K(N, k, s);
                        CHECK(m_brute(kfam, ot) == m_brute_expansion(kfam, ot));
                    }
                }
                for (int k = 0; k <= N - 1; ++k) {
                    auto jfam = IdealFamily::J(N, k);
                    CHECK(m_brute(jfam, ot) == m_brute_expansion(jfam, ot));
                }
            }
    }
}

TEST_CASE("composition model equals polynomial expansion at N = 5 and 6") {
    // Deterministic sample across types and families; the orbit expansion
    // dedupes images up to sign, so even the degree-20 generators stay small.
    std::mt19937_64 rng(424242);
    for (int N : {5, 6}) {
        for (Family family : {Family::B, Family::D}) {
            auto types = enumerate_orbit_types(family, N);
            int budget = N == 5 ? 12 : 6;
            for (int pick = 0; pick < budget; ++pick) {
                const auto& ot = types[rng() % types.size()];
                if (ot.minus_flag) continue;
                int k = 1 + static_cast<int>(rng() % (N - 1));
                int s = static_cast<int>(rng() % (k + 1));
                CAPTURE(ot.str());
                CAPTURE(k);
                CAPTURE(s);
                auto ipm = IdealFamily::Ipm(N, k);
                CHECK(m_brute(ipm, ot) == m_brute_expansion(ipm, ot));
                auto kf = IdealFamily::K(N, k, s);
                CHECK(m_brute(kf, ot) == m_brute_expansion(kf, ot));
                auto jf = IdealFamily::J(N, s);
                CHECK(m_brute(jf, ot) == m_brute_expansion(jf, ot));
            }
        }
    }
}

TEST_CASE("minus types delegate to the plus values") {
    OrbitType minus{Family::D, Partition({2, 2}), 0, true};
    OrbitType plus{Family::D, Partition({2, 2}), 0, false};
    auto fam = IdealFamily::Ipm(4, 2);
    CHECK(m_closed(fam, minus) == m_closed(fam, plus));
    CHECK(hyperplane_count(minus) == hyperplane_count(plus));
    // direct expansion on the actual minus frame agrees
    CHECK(m_brute_expansion(fam, minus) == m_brute_expansion(fam, plus));
    // the minus type with an odd part is the plus orbit in disguise
    OrbitType odd_minus{Family::D, Partition({3, 1}), 0, true};
    CHECK(delegate_minus(odd_minus).minus_flag == false);
    CHECK(delegate_minus(minus).minus_flag == true);
}

TEST_CASE("brute-force searches stop hard at their caps") {
    OrbitType big{Family::B, Partition({4, 3}), 0, false};
    CHECK_THROWS_AS(m_brute(IdealFamily::Ipm(7, 2), big), rca::BruteCapError);
    CHECK(m_brute(IdealFamily::Ipm(7, 2), big, 8) >= 0);
    CHECK_THROWS_AS(m_brute_expansion(IdealFamily::Ipm(7, 2), big), rca::BruteCapError);
}

TEST_CASE("explicit lattice classification matches the enumeration") {
    for (Family family : {Family::A, Family::B, Family::D}) {
        for (int N = 2; N <= 4; ++N) {
            if (family == Family::A && N < 3) continue; // A_1 in 2 vars is fine but trivial
            CAPTURE(rca::coxeter::family_name(family));
            CAPTURE(N);
            auto counts = explicit_lattice_counts(family, N);
            std::set<std::string> enumerated;
            for (const auto& ot : enumerate_orbit_types(family, N))
                enumerated.insert(delegate_minus(ot).str());
            // every classified flat type is an enumerated type
            for (const auto& [name, count] : counts) {
                CAPTURE(name);
                CHECK(enumerated.count(name) == 1);
                CHECK(count > 0);
            }
            // every enumerated type (after minus delegation) occurs
            for (const auto& name : enumerated) CHECK(counts.count(name) == 1);
        }
    }
}

TEST_CASE("explicit lattice counts for the smallest arrangements") {
    auto a3 = explicit_lattice_counts(Family::A, 3);
    CHECK(a3.at("A:(2,1),z=0") == 3);
    CHECK(a3.at("A:(3),z=0") == 1);
    CHECK(a3.size() == 2);

    auto b2 = explicit_lattice_counts(Family::B, 2);
    CHECK(b2.at("B:(2),z=0") == 2);
    CHECK(b2.at("B:(1),z=1") == 2);
    CHECK(b2.at("B:(),z=2") == 1);

    auto d3 = explicit_lattice_counts(Family::D, 3);
    // 6 hyperplanes of type (2,1), z=2 axes, the two full diagonals, origin
    CHECK(d3.at("D:(2,1),z=0") == 6);
    CHECK(d3.at("D:(1),z=2") == 3);
    CHECK(d3.at("D:(3),z=0") == 4);
    CHECK(d3.at("D:(),z=3") == 1);
}

TEST_CASE("kappa with unit weights counts hyperplanes") {
    for (Family family : {Family::A, Family::B, Family::D})
        for (const auto& ot : enumerate_orbit_types(family, 4))
            CHECK(kappa(ot, Rational(1), Rational(1)) == Rational(hyperplane_count(ot)));
}
