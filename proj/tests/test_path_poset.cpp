#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mpx/formulas.hpp"
#include "mpx/path_poset.hpp"
#include "mpx/verify.hpp"

using namespace mpx;

TEST_CASE("poset basics") {
    PathPoset p(linear_coherent(3));
    CHECK(p.size() == 8);  // Boolean lattice on three edges
    CHECK(p.elements()[0].edges.empty());
    for (int i = 1; i < p.size(); ++i) {
        CHECK(p.leq(0, i));
        CHECK_FALSE(p.leq(i, 0));
    }

    PathPoset cycle(polygon_coherent(4));
    CHECK(cycle.size() == (1 << 4) - 1);  // Boolean lattice minus its maximum
}

TEST_CASE("moebius values come out as the sign of the edge count") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        Digraph g = random_digraph(rng, 2, 5, 8);
        PathPoset p(g);
        for (int i = 0; i < p.size(); ++i) {
            Int mu = p.mobius_from_bottom(i);
            int len = p.elements()[i].length();
            CHECK(mu == ((len % 2 == 0) ? 1 : -1));
        }
    }
}

TEST_CASE("moebius on named elements") {
    PathPoset p(linear_coherent(3));
    CHECK(p.mobius_from_bottom(Multipath{}) == 1);
    CHECK(p.mobius_from_bottom(Multipath{{0}}) == -1);
    CHECK(p.mobius_from_bottom(Multipath{{0, 1}}) == 1);
}

TEST_CASE("reduced euler characteristic of the named families") {
    CHECK(reduced_euler_characteristic(linear_coherent(3)) == 0);
    CHECK(reduced_euler_characteristic(complete(3)) == -1);
    CHECK(reduced_euler_characteristic(dandelion(3, 2)) == -2);
    CHECK(reduced_euler_characteristic(polygon_coherent(5)) == -1);  // a 3-sphere
}

TEST_CASE("both chi routes agree on a random corpus") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Digraph g = random_digraph(rng, 1, 6, 10);
        CHECK(chi_via_mobius(g) == chi_via_fvector(g));
    }
}

TEST_CASE("disjoint unions multiply with the join sign") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        Digraph g = random_digraph(rng, 1, 4, 5);
        Digraph h = random_digraph(rng, 1, 4, 5);
        CHECK(chi_via_fvector(disjoint_union(g, h)) ==
              -chi_via_fvector(g) * chi_via_fvector(h));
    }
}

TEST_CASE("chi against the closed forms") {
    for (int n = 1; n <= 6; ++n) CHECK(chi_via_fvector(complete(n)) == chi_complete(n));
    for (int n = 1; n <= 8; ++n) CHECK(chi_via_fvector(tournament(n)) == chi_tournament(n));
    for (int n = 3; n <= 8; ++n)
        CHECK(chi_via_fvector(reversed_tournament(n)) == chi_reversed_tournament(n));
}
