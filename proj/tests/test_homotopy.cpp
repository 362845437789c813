#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mpx/formulas.hpp"
#include "mpx/homotopy.hpp"
#include "mpx/multipath.hpp"
#include "mpx/verify.hpp"

using namespace mpx;

TEST_CASE("join, wedge and suspension normal forms") {
    HomotopyType s0 = HomotopyType::sphere(0);
    CHECK(join(s0, s0) == HomotopyType::sphere(1));
    CHECK(join(HomotopyType::contractible(), s0) == HomotopyType::contractible());
    CHECK(join(HomotopyType::empty_type(), s0) == s0);
    CHECK(suspend(HomotopyType::empty_type()) == s0);
    CHECK(suspend(HomotopyType::sphere(2)) == HomotopyType::sphere(3));
    CHECK(wedge({s0, s0}) == HomotopyType::wedge_of_spheres({{0, 2}}));
    CHECK(wedge({}) == HomotopyType::contractible());

    HomotopyType w = HomotopyType::wedge_of_spheres({{1, 2}, {2, 1}});
    HomotopyType joined = join(w, s0);
    CHECK(joined == HomotopyType::wedge_of_spheres({{2, 2}, {3, 1}}));

    HomologySummary h;
    h.betti = {0, 3};
    HomotopyType u = HomotopyType::unknown(h);
    CHECK(join(u, s0).homology().betti_at(2) == 3);
    CHECK_THROWS_AS(join(u, u), std::invalid_argument);
    CHECK_THROWS_AS(wedge({HomotopyType::empty_type()}), std::invalid_argument);
}

TEST_CASE("euler characteristic laws of the algebra") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> dim(0, 3), count(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        HomotopyType a = HomotopyType::wedge_of_spheres({{dim(rng), count(rng)}});
        HomotopyType b = HomotopyType::wedge_of_spheres({{dim(rng), count(rng)}});
        CHECK(join(a, b).reduced_euler() == -a.reduced_euler() * b.reduced_euler());
        CHECK(suspend(a).reduced_euler() == -a.reduced_euler());
    }
}

TEST_CASE("alternating path classification against the oracle") {
    for (int v = 1; v <= 12; ++v) {
        HomotopyType t = classify_alternating_path(v);
        Digraph g = v == 1 ? Digraph(1, {}) : linear_alternating(v - 1);
        OracleComparison cmp = compare_with_oracle(t, g);
        INFO("v = " << v << ": " << t.to_string() << " " << cmp.detail);
        CHECK(cmp.match);
    }
    CHECK(classify_alternating_path(4) == HomotopyType::sphere(0));
    CHECK(classify_alternating_path(5) == HomotopyType::contractible());
    CHECK(classify_alternating_path(7) == HomotopyType::sphere(1));
}

TEST_CASE("linear words, exhaustive to six edges") {
    for (int len = 1; len <= 6; ++len) {
        for (std::uint64_t bits = 0; bits < (1u << len); ++bits) {
            OrientationWord w(len);
            for (int i = 0; i < len; ++i)
                w[i] = (bits >> i & 1) ? Orient::backward : Orient::forward;
            HomotopyType t = classify_linear(w);
            OracleComparison cmp = compare_with_oracle(t, linear_from_word(w));
            CHECK(cmp.match);
        }
    }
    OrientationWord coherent(5, Orient::forward);
    CHECK(classify_linear(coherent) == HomotopyType::contractible());
    CHECK(classify_linear(word_from_string("fbf")) == HomotopyType::sphere(0));
}

TEST_CASE("polygon words, exhaustive to seven edges") {
    for (int len = 3; len <= 7; ++len) {
        for (std::uint64_t bits = 0; bits < (1u << len); ++bits) {
            OrientationWord w(len);
            for (int i = 0; i < len; ++i)
                w[i] = (bits >> i & 1) ? Orient::backward : Orient::forward;
            HomotopyType t = classify_polygon(w);
            OracleComparison cmp = compare_with_oracle(t, polygon_from_word(w));
            CHECK(cmp.match);
        }
    }
    OrientationWord coherent5(5, Orient::forward);
    CHECK(classify_polygon(coherent5) == HomotopyType::sphere(3));
    CHECK(classify_polygon(word_from_string("fbfbfb")) ==
          HomotopyType::wedge_of_spheres({{1, 2}}));
    CHECK(classify_polygon(word_from_string("fbfb")) == HomotopyType::sphere(0));
}

TEST_CASE("grid classifiers at pinned parameters") {
    CHECK(classify_grid_II(3, 1) == HomotopyType::sphere(3));
    CHECK(classify_grid_II(2, 2) == HomotopyType::contractible());
    CHECK(classify_grid_II(0, 5) == HomotopyType::contractible());
    CHECK(classify_grid_II(0, 0) == HomotopyType::empty_type());

    CHECK(classify_grid_AI(1, 1) == HomotopyType::sphere(1));
    CHECK(classify_grid_AI(2, 3) == HomotopyType::contractible());
    CHECK(classify_grid_AI(3, 2) == HomotopyType::sphere(5));
}

TEST_CASE("small grids against the oracle") {
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 2; ++m) {
            Digraph g = cartesian_product(linear_coherent(n), linear_coherent(m));
            CHECK(compare_with_oracle(classify_grid_II(n, m), g).match);
        }
    for (int n = 1; n <= 3; ++n) {
        Digraph g = cartesian_product(linear_alternating(n), linear_coherent(1));
        CHECK(compare_with_oracle(classify_grid_AI(n, 1), g).match);
    }
}

TEST_CASE("caterpillar classification") {
    CHECK(classify_caterpillar({1, 0, 2}) == HomotopyType::sphere(1));  // L_2(0,1) = 1
    CHECK(classify_caterpillar({1, 0, 1, 0, 1}) == HomotopyType::contractible());
    CHECK(classify_caterpillar({1, 0, 1, 0, 1, 0}) == HomotopyType::sphere(2));
    CHECK(classify_caterpillar({2, 0}) == HomotopyType::wedge_of_spheres({{0, 2}}));
    CHECK(classify_caterpillar({0}) == HomotopyType::empty_type());
    CHECK(classify_caterpillar({1}) == HomotopyType::contractible());

    // The 2,0,1,0,... family: one sphere when the tree has an odd spine
    // after folding, k+1 spheres otherwise.
    CHECK(classify_caterpillar({2, 0, 1}) == HomotopyType::sphere(1));
    CHECK(classify_caterpillar({2, 0, 1, 0}) == HomotopyType::wedge_of_spheres({{1, 3}}));
    CHECK(classify_caterpillar({2, 0, 1, 0, 1, 0, 1}) == HomotopyType::sphere(3));
    CHECK(classify_caterpillar({2, 0, 1, 0, 1, 0, 1, 0}) ==
          HomotopyType::wedge_of_spheres({{3, 5}}));
    CHECK(classify_caterpillar({2, 0, 1, 0, 1, 0}) ==
          HomotopyType::wedge_of_spheres({{2, 4}}));

    for (const auto& legs :
         std::vector<std::vector<int>>{{1, 0, 2}, {3, 0, 1}, {2, 0, 2}, {1, 0, 1, 0, 2},
                                       {2, 0, 1, 0}, {4}, {1, 1}, {2, 1, 2}}) {
        HomotopyType t = classify_caterpillar(legs);
        CHECK(compare_with_oracle(t, caterpillar(legs)).match);
    }
}

TEST_CASE("grid rows over arbitrary lines decompose into caterpillars") {
    for (const char* word : {"f", "fb", "ffb", "fbf", "ffff", "fffbf", "bfbf", "ffbb"}) {
        OrientationWord w = word_from_string(word);
        HomotopyType t = classify_LxI1(w);
        Digraph g = cartesian_product(linear_from_word(w), linear_coherent(1));
        OracleComparison cmp = compare_with_oracle(t, g);
        INFO(word << " -> " << t.to_string() << " " << cmp.detail);
        CHECK(cmp.match);
    }
    // Coherent rows give single spheres.
    CHECK(classify_LxI1(word_from_string("fff")) == HomotopyType::sphere(3));
    // Alternating rows agree with the alternating-grid formula.
    CHECK(classify_LxI1(word_from_string("fb")) == classify_grid_AI(2, 1));
    CHECK(classify_LxI1(word_from_string("fbf")) == classify_grid_AI(3, 1));
}

TEST_CASE("dandelion classification") {
    CHECK(classify_dandelion(3, 2) == HomotopyType::wedge_of_spheres({{1, 2}}));
    CHECK(classify_dandelion(4, 1) == HomotopyType::contractible());
    CHECK(classify_dandelion(0, 3) == HomotopyType::wedge_of_spheres({{0, 2}}));
    CHECK(classify_dandelion(1, 0) == HomotopyType::contractible());
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
            if (n + m < 1) continue;
            CHECK(compare_with_oracle(classify_dandelion(n, m), dandelion(n, m)).match);
        }
}

TEST_CASE("tournament homotopy") {
    CHECK(tournament_homotopy(1) == HomotopyType::empty_type());
    CHECK(tournament_homotopy(2) == HomotopyType::contractible());
    CHECK(tournament_homotopy(3) == HomotopyType::sphere(0));
    HomotopyType t7 = tournament_homotopy(7);
    CHECK(t7 == HomotopyType::wedge_of_spheres({{2, 6}, {3, 15}}));
    CHECK(t7.reduced_euler() == chi_tournament(7));
}

TEST_CASE("suspension law holds for the two-vertex tournament") {
    CHECK(suspension_law_check(tournament(2)) == LawCheck::pass);
}

TEST_CASE("suspension law is refuted for larger hypothesis-satisfying digraphs") {
    // The covering argument behind the shift law needs the two added
    // vertices to be reachable only through the distinguished sink; with
    // three or more vertices two other vertices can occupy both, and the
    // law genuinely fails. The coherent path on three vertices is the
    // smallest counterexample.
    CHECK(suspension_law_check(linear_coherent(2)) == LawCheck::fail);
    CHECK(suspension_law_check(dandelion(2, 0)) == LawCheck::fail);
    // Hypothesis violations are skipped, not failed.
    CHECK(suspension_law_check(Digraph(3, {})) == LawCheck::skipped);
    CHECK(suspension_law_check(polygon_coherent(3)) == LawCheck::skipped);
}

TEST_CASE("incomplete tournaments are torsion-free at desk scale") {
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t bits = 0; bits < (1u << (n + 1)); ++bits) {
            std::vector<int> removed;
            for (int i = 0; i <= n; ++i)
                if (bits >> i & 1) removed.push_back(i);
            HomologySummary h =
                reduced_homology(multipath_complex(incomplete_tournament(n, removed)));
            CHECK(h.torsion_free());
        }
}

TEST_CASE("unknown type carries its homology") {
    HomologySummary h;
    h.betti = {1, 0, 2};
    HomotopyType u = HomotopyType::unknown(h);
    CHECK(u.to_string().find("unknown") != std::string::npos);
    CHECK(u.homology().betti_at(2) == 2);
    CHECK(HomotopyType::wedge_from_homology(h) ==
          HomotopyType::wedge_of_spheres({{0, 1}, {2, 2}}));
}
