#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "mpx/digraph.hpp"
#include "mpx/verify.hpp"

using namespace mpx;

TEST_CASE("construction validates and canonicalises") {
    Digraph g = Digraph::from_pairs(2, {{1, 0}, {0, 1}, {1, 0}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges()[0] == Edge{0, 1});

    CHECK(Digraph::from_pairs(1, {}).vertex_count() == 1);
    CHECK_THROWS_AS(Digraph::from_pairs(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph::from_pairs(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("linear families") {
    CHECK(linear_coherent(0).vertex_count() == 1);
    CHECK(linear_coherent(0).edge_count() == 0);

    Digraph i3 = linear_coherent(3);
    CHECK(i3.vertex_count() == 4);
    CHECK(i3.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});

    CHECK(linear_alternating(2).edges() == std::vector<Edge>{{0, 1}, {2, 1}});
    Digraph a4 = linear_alternating(4);
    CHECK(a4.edges() == std::vector<Edge>{{0, 1}, {2, 1}, {2, 3}, {4, 3}});
    for (int v = 0; v < a4.vertex_count(); ++v)
        CHECK((a4.in_degree(v) == 0 || a4.out_degree(v) == 0));
    CHECK_THROWS_AS(linear_alternating(0), std::invalid_argument);

    CHECK(linear_from_word(word_from_string("fff")) == linear_coherent(3));
    CHECK(linear_from_word(word_from_string("fb")) == linear_alternating(2));
}

TEST_CASE("polygons") {
    Digraph p3 = polygon_coherent(3);
    CHECK(p3.edge_count() == 3);
    CHECK_FALSE(p3.is_acyclic());
    for (int v = 0; v < 4; ++v) {
        Digraph pn = polygon_coherent(v + 3);
        for (int u = 0; u < pn.vertex_count(); ++u) {
            CHECK(pn.in_degree(u) == 1);
            CHECK(pn.out_degree(u) == 1);
        }
    }
    CHECK_THROWS_AS(polygon_coherent(2), std::invalid_argument);
    CHECK_THROWS_AS(polygon_from_word(word_from_string("fb")), std::invalid_argument);

    Digraph square = polygon_from_word(word_from_string("fbfb"));
    for (int v = 0; v < 4; ++v)
        CHECK((square.in_degree(v) == 0 || square.out_degree(v) == 0));
}

TEST_CASE("dandelions and complete families") {
    Digraph d32 = dandelion(3, 2);
    CHECK(d32.vertex_count() == 6);
    CHECK(d32.edge_count() == 5);
    CHECK(d32.in_degree(0) == 3);
    CHECK(d32.out_degree(0) == 2);
    CHECK(dandelion(1, 0).edge_count() == 1);
    CHECK(dandelion(0, 3).out_degree(0) == 3);
    CHECK_THROWS_AS(dandelion(0, 0), std::invalid_argument);

    CHECK(complete(3).edge_count() == 6);
    CHECK(tournament(4).edge_count() == 6);
    CHECK(tournament(4).is_acyclic());
    CHECK(complete_bipartite(2, 3).edge_count() == 6);

    // Reversing one edge of the smallest allowed tournament gives a 3-cycle.
    Digraph r3 = reversed_tournament(3);
    CHECK(r3.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
    CHECK_FALSE(r3.is_acyclic());
    CHECK_THROWS_AS(reversed_tournament(2), std::invalid_argument);
}

TEST_CASE("incomplete tournaments") {
    CHECK(incomplete_tournament(4, {4}) == tournament(5));
    CHECK(incomplete_tournament(2, {0, 1, 2}).edge_count() == 0);
    CHECK_THROWS_AS(incomplete_tournament(4, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(incomplete_tournament(4, {3, 1}), std::invalid_argument);

    // Edge count C(n+1,2) - sum over removed of (n - i).
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t bits = 0; bits < (1u << (n + 1)); ++bits) {
            std::vector<int> removed;
            int expected = n * (n + 1) / 2;
            for (int i = 0; i <= n; ++i)
                if (bits >> i & 1) {
                    removed.push_back(i);
                    expected -= n - i;
                }
            CHECK(incomplete_tournament(n, removed).edge_count() == expected);
        }
}

TEST_CASE("incomplete tournament T5^(3)") {
    // C(6,2) minus the two out-edges of vertex 3.
    CHECK(incomplete_tournament(5, {3}).edge_count() == 13);
}

TEST_CASE("caterpillars are alternating trees") {
    Digraph s1 = caterpillar({2, 0});
    CHECK(s1.vertex_count() == 4);
    CHECK(s1.edge_count() == 3);
    CHECK(s1.out_degree(0) == 3);  // same tree as the one-vertex star with 3 legs

    Digraph g11 = caterpillar({1});
    CHECK(g11.edge_count() == 1);

    Digraph cat = caterpillar({1, 0, 1, 0, 1});
    CHECK(cat.edge_count() == 4 + 3);
    for (int v = 0; v < cat.vertex_count(); ++v)
        CHECK((cat.in_degree(v) == 0 || cat.out_degree(v) == 0));
    CHECK(cat.out_degree(0) > 0);  // spine start is a source
}

TEST_CASE("cone and suspension") {
    CHECK(cone(Digraph(1, {})).edge_count() == 1);
    Digraph sink2 = cone(Digraph(2, {}));
    CHECK(sink2.in_degree(2) == 2);

    Digraph s = suspension(tournament(2));
    CHECK(s.vertex_count() == 4);
    CHECK(s.edge_count() == 1 + 2 * 2);
    // Suspending one arrow gives the tournament on four vertices with the
    // out-edges of vertex 2 removed, on the nose.
    CHECK(s == incomplete_tournament(3, {2}));
    CHECK(suspension(Digraph(1, {})) == dandelion(0, 2));
    for (const Digraph& g : {tournament(3), dandelion(2, 1)})
        CHECK(suspension(g).edge_count() == g.edge_count() + 2 * g.vertex_count());
}

TEST_CASE("box product") {
    Digraph square = cartesian_product(linear_coherent(1), linear_coherent(1));
    CHECK(square.vertex_count() == 4);
    CHECK(square.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});

    Digraph g = tournament(3);
    CHECK(cartesian_product(g, Digraph(1, {})) == g);
    CHECK(cartesian_product(linear_alternating(1), linear_coherent(1)) ==
          cartesian_product(linear_coherent(1), linear_coherent(1)));
}

TEST_CASE("product is associative up to the grid relabelling") {
    Digraph a = linear_coherent(2), b = linear_alternating(1), c = tournament(2);
    Digraph left = cartesian_product(cartesian_product(a, b), c);
    Digraph right = cartesian_product(a, cartesian_product(b, c));
    // Both orders induce the same vertex numbering (u*|V(H)|+a is
    // associative), so equality is on the nose.
    CHECK(left == right);
}

TEST_CASE("scc and connectivity") {
    Digraph cycle = polygon_coherent(4);
    auto ids = cycle.scc_ids();
    CHECK(std::set<int>(ids.begin(), ids.end()).size() == 1);
    CHECK(cycle.weakly_connected());

    Digraph two = disjoint_union(linear_coherent(1), linear_coherent(1));
    CHECK_FALSE(two.weakly_connected());
    CHECK(two.scc_ids() != std::vector<int>(4, 0));
}

TEST_CASE("generators satisfy the digraph invariants on random parameters") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 6)(rng);
        int m = std::uniform_int_distribution<int>(1, 6)(rng);
        for (const Digraph& g :
             {tournament(n), complete(n), complete_bipartite(n, m), dandelion(n, m),
              linear_alternating(n), linear_coherent(n),
              cartesian_product(linear_coherent(n % 3 + 1), linear_alternating(m % 3 + 1))}) {
            std::set<std::pair<int, int>> seen;
            for (const Edge& e : g.edges()) {
                CHECK(e.source != e.target);
                CHECK(e.source >= 0);
                CHECK(e.target < g.vertex_count());
                CHECK(seen.insert({e.source, e.target}).second);
            }
        }
        CHECK(tournament(n).edge_count() == n * (n - 1) / 2);
        CHECK(complete(n).edge_count() == n * (n - 1));
    }
}

TEST_CASE("dot export") {
    std::string dot = linear_coherent(2).to_dot();
    CHECK(dot.find("0 -> 1;") != std::string::npos);
    CHECK(dot.find("1 -> 2;") != std::string::npos);
}
