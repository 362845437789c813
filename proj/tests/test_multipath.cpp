#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mpx/formulas.hpp"
#include "mpx/multipath.hpp"
#include "mpx/verify.hpp"

using namespace mpx;

TEST_CASE("is_multipath on the basic shapes") {
    Digraph i3 = linear_coherent(3);
    CHECK(is_multipath(i3, {0, 1, 2}));

    Digraph p3 = polygon_coherent(3);
    CHECK_FALSE(is_multipath(p3, {0, 1, 2}));  // full directed cycle
    CHECK(is_multipath(p3, {0, 1}));
    CHECK(is_multipath(p3, {}));

    Digraph t3 = tournament(3);
    int e01 = t3.edge_index(0, 1), e02 = t3.edge_index(0, 2);
    CHECK_FALSE(is_multipath(t3, {e01, e02}));  // outdegree 2 at vertex 0

    CHECK_THROWS_AS(is_multipath(t3, {99}), std::out_of_range);
}

TEST_CASE("enumeration counts match the classical families") {
    CHECK(enumerate_multipaths(linear_coherent(3)).size() == 8);
    CHECK(enumerate_multipaths(complete(3)).size() == 13);
    CHECK(enumerate_multipaths(dandelion(3, 2)).size() == 12);

    CHECK(count_by_length(linear_coherent(3)) == std::vector<long long>{1, 3, 3, 1});
    CHECK(count_by_length(complete_bipartite(2, 2)) == std::vector<long long>{1, 4, 2});
    CHECK(count_by_length(tournament(3)) == std::vector<long long>{1, 3, 1});
    CHECK(count_by_length(dandelion(3, 2)) == std::vector<long long>{1, 5, 6});
}

TEST_CASE("enumeration order is size-then-lex and deterministic") {
    Digraph g = tournament(4);
    auto mps = enumerate_multipaths(g);
    REQUIRE(!mps.empty());
    CHECK(mps.front().edges.empty());
    for (std::size_t i = 1; i < mps.size(); ++i) CHECK(multipath_less(mps[i - 1], mps[i]));
}

TEST_CASE("sharded enumeration agrees with single-threaded") {
    for (const Digraph& g : {tournament(5), complete(4), polygon_coherent(5)}) {
        auto single = enumerate_multipaths(g);
        auto sharded = enumerate_multipaths(g, 0, 4);
        CHECK(single == sharded);
    }
}

TEST_CASE("count cap") {
    CHECK_THROWS_AS(enumerate_multipaths(complete(4), 10), std::length_error);
    CHECK(count_multipaths_up_to(complete(4), 10) == 11);
    CHECK(count_multipaths_up_to(complete(4), 100000) == 73);
}

TEST_CASE("downward closure holds") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Digraph g = random_digraph(rng, 2, 6, 9);
        for (const Multipath& m : enumerate_multipaths(g)) {
            for (std::size_t k = 0; k < m.edges.size(); ++k) {
                std::vector<int> sub = m.edges;
                sub.erase(sub.begin() + static_cast<long>(k));
                CHECK(is_multipath(g, sub));
            }
        }
    }
}

TEST_CASE("tournaments enumerate to Bell numbers") {
    for (int n = 1; n <= 8; ++n)
        CHECK(Int(count_multipaths(tournament(n))) == bell(n));
}

TEST_CASE("complete digraphs enumerate to summed Lah numbers") {
    for (int n = 1; n <= 6; ++n) {
        Int expected = 0;
        for (int k = 1; k <= n; ++k) expected += lah(n, k);
        CHECK(Int(count_multipaths(complete(n))) == expected);
    }
}

TEST_CASE("bipartite counts by length are falling-factorial products") {
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m) {
            auto counts = count_by_length(complete_bipartite(n, m));
            for (int l = 0; l < static_cast<int>(counts.size()); ++l)
                CHECK(Int(counts[l]) == binomial(n, l) * binomial(m, l) * factorial(l));
        }
}

TEST_CASE("maximal multipaths") {
    auto facets = maximal_multipaths(linear_coherent(3));
    REQUIRE(facets.size() == 1);
    CHECK(facets[0].edges == std::vector<int>{0, 1, 2});

    CHECK(maximal_multipaths(polygon_coherent(4)).size() == 4);
    for (const Multipath& f : maximal_multipaths(polygon_coherent(4)))
        CHECK(f.edges.size() == 3);

    auto a2 = maximal_multipaths(linear_alternating(2));
    REQUIRE(a2.size() == 2);
    CHECK(a2[0].edges.size() == 1);
}
