#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "mpx/dynamics.hpp"
#include "mpx/multipath.hpp"
#include "mpx/simplicial.hpp"
#include "mpx/verify.hpp"

using namespace mpx;

TEST_CASE("vertex stability") {
    Digraph i2 = linear_coherent(2);
    CHECK(vertex_stability(i2, 1) == Stability::unstable);
    CHECK(vertex_stability(i2, 0) == Stability::stable);

    Digraph a4 = linear_alternating(4);
    for (int v = 0; v < a4.vertex_count(); ++v)
        CHECK(vertex_stability(a4, v) == Stability::stable);

    CHECK(vertex_stability(dandelion(2, 2), 0) == Stability::unstable);
    CHECK(vertex_stability(Digraph(1, {}), 0) == Stability::stable);
}

TEST_CASE("region views") {
    // Two arrows into a shared head followed by an arrow chain out of it.
    Digraph g = Digraph::from_pairs(4, {{0, 2}, {1, 2}, {2, 3}});
    RegionView r(g, {0, 1});
    CHECK(r.support() == std::vector<int>{0, 1, 2});
    CHECK(r.boundary() == std::vector<int>{2});
    CHECK(r.size() == 2);
    CHECK(r.complement_edges() == std::vector<int>{2});
    CHECK(r.spans_connected_subgraph());
}

TEST_CASE("region validity") {
    // Whole connected graph is always a region: empty boundary.
    Digraph t4 = tournament(4);
    CHECK(is_dynamical_region(t4, {0, 1, 2, 3, 4, 5}).ok);

    CHECK_THROWS_AS(is_dynamical_region(t4, {}), std::invalid_argument);

    // A single edge inside a directed cycle is not a region.
    Digraph p3 = polygon_coherent(3);
    RegionCheck cycle_check = is_dynamical_region(p3, {0});
    CHECK_FALSE(cycle_check.ok);
    CHECK(cycle_check.reason.find("cycle") != std::string::npos);

    // Each single edge of the coherent path is a region on its own; its
    // boundary vertices are unstable in the path but stable on both sides.
    Digraph i3 = linear_coherent(3);
    CHECK(is_dynamical_region(i3, {0}).ok);
    CHECK(is_dynamical_region(i3, {1}).ok);

    // One arrow of the alternating path is not: the shared sink is stable
    // in the ambient digraph.
    Digraph a2 = linear_alternating(2);
    RegionCheck stable_check = is_dynamical_region(a2, {0});
    CHECK_FALSE(stable_check.ok);
    CHECK(stable_check.reason.find("stable in the ambient") != std::string::npos);
}

TEST_CASE("two-row example: one blue component is a module, the other is not") {
    // Two horizontal rows t0..t5 (0..5) and b0..b5 (6..11) with a single
    // directed cycle t4 -> t3 -> b3 -> b4 -> t4 on the right half.
    Digraph g = Digraph::from_pairs(
        12, {{0, 1}, {2, 1}, {4, 3}, {5, 4}, {6, 7}, {8, 7}, {8, 9}, {9, 10},
             {11, 10}, {0, 6}, {2, 8}, {3, 9}, {10, 4}, {5, 11}});
    std::vector<int> left = {g.edge_index(0, 1), g.edge_index(2, 1), g.edge_index(0, 6),
                             g.edge_index(2, 8)};
    std::sort(left.begin(), left.end());
    CHECK(is_dynamical_region(g, left).ok);
    CHECK(module_of_edge(g, g.edge_index(0, 1)) == left);

    RegionCheck right = is_dynamical_region(g, {g.edge_index(4, 3)});
    CHECK_FALSE(right.ok);
    CHECK(right.reason.find("cycle") != std::string::npos);
}

TEST_CASE("module closure") {
    // Tournaments are single modules.
    for (int n = 3; n <= 5; ++n) {
        Digraph t = tournament(n);
        std::vector<int> all(t.edge_count());
        for (int i = 0; i < t.edge_count(); ++i) all[i] = i;
        CHECK(module_of_edge(t, 0) == all);
    }

    // Middle edge of the coherent path is its own module: consecutive
    // edges share a vertex but never a source or a target.
    Digraph i3 = linear_coherent(3);
    CHECK(module_of_edge(i3, 1) == std::vector<int>{1});

    // Any edge of a directed cycle pulls in the whole cycle.
    Digraph p3 = polygon_coherent(3);
    CHECK(module_of_edge(p3, 1) == std::vector<int>{0, 1, 2});
}

TEST_CASE("decomposition of the named families") {
    // I_n x I_1: two 2-edge corner modules and n-1 three-edge modules.
    for (int n = 2; n <= 5; ++n) {
        Digraph grid = cartesian_product(linear_coherent(n), linear_coherent(1));
        ModuleDecomposition d = decompose(grid);
        std::multiset<std::size_t> sizes;
        for (const auto& mod : d.modules) sizes.insert(mod.size());
        CHECK(sizes.count(2) == 2);
        CHECK(sizes.count(3) == static_cast<std::size_t>(n - 1));
        CHECK(d.modules.size() == static_cast<std::size_t>(n + 1));
    }

    // Dandelions split into the sink star and the source star.
    ModuleDecomposition d = decompose(dandelion(3, 2));
    REQUIRE(d.modules.size() == 2);
    CHECK((d.modules[0].size() == 3 || d.modules[0].size() == 2));
    CHECK(d.modules[0].size() + d.modules[1].size() == 5);

    // Alternating paths are single modules.
    for (int n = 1; n <= 6; ++n)
        CHECK(decompose(linear_alternating(n)).modules.size() == 1);
}

TEST_CASE("decomposition is a partition into valid minimal regions") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        Digraph g = random_digraph(rng, 2, 7, 9);
        ModuleDecomposition d = decompose(g);
        std::set<int> seen;
        for (const auto& mod : d.modules) {
            for (int id : mod) CHECK(seen.insert(id).second);
            CHECK(is_dynamical_region(g, mod).ok);
            for (int id : mod) CHECK(module_of_edge(g, id) == mod);
        }
        CHECK(seen.size() == static_cast<std::size_t>(g.edge_count()));
    }
}

namespace {

// Weakly connected components of an edge subset, as edge lists.
std::vector<std::vector<int>> edge_components(const Digraph& g, const std::vector<int>& ids) {
    std::map<int, int> leader;  // vertex -> union-find parent
    std::function<int(int)> find = [&](int v) {
        auto it = leader.find(v);
        if (it == leader.end()) {
            leader[v] = v;
            return v;
        }
        if (it->second == v) return v;
        return it->second = find(it->second);
    };
    for (int id : ids) leader[find(g.edge(id).source)] = find(g.edge(id).target);
    std::map<int, std::vector<int>> groups;
    for (int id : ids) groups[find(g.edge(id).source)].push_back(id);
    std::vector<std::vector<int>> out;
    for (auto& [root, group] : groups) out.push_back(std::move(group));
    return out;
}

bool region_valid(const Digraph& g, const std::vector<int>& ids) {
    try {
        return is_dynamical_region(g, ids).ok;
    } catch (const std::invalid_argument&) {
        return false;  // empty or disconnected
    }
}

}  // namespace

TEST_CASE("components of intersections of sampled regions remain regions") {
    std::mt19937_64 rng(37);
    int checked = 0;
    for (int trial = 0; trial < 600 && checked < 80; ++trial) {
        Digraph g = random_digraph(rng, 3, 6, 10);
        ModuleDecomposition d = decompose(g);
        if (d.modules.size() < 2) continue;
        // Every region is a union of modules; sample two valid ones.
        auto sample_region = [&]() {
            std::vector<int> ids;
            for (const auto& mod : d.modules)
                if (rng() & 1) ids.insert(ids.end(), mod.begin(), mod.end());
            std::sort(ids.begin(), ids.end());
            return ids;
        };
        std::vector<int> r = sample_region(), s = sample_region();
        if (!region_valid(g, r) || !region_valid(g, s)) continue;
        std::vector<int> common;
        std::set_intersection(r.begin(), r.end(), s.begin(), s.end(),
                              std::back_inserter(common));
        if (common.empty()) continue;
        ++checked;
        for (const auto& component : edge_components(g, common))
            CHECK(is_dynamical_region(g, component).ok);
    }
    CHECK(checked > 20);
}

TEST_CASE("stable modules have matching-complex faces") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        Digraph g = random_digraph(rng, 2, 6, 8);
        for (const auto& mod : decompose(g).modules) {
            Digraph sub = subgraph_from_edges(g, mod);
            bool all_stable = true;
            for (int v = 0; v < sub.vertex_count(); ++v)
                if (vertex_stability(sub, v) == Stability::unstable) all_stable = false;
            if (all_stable) CHECK(complexes_isomorphic_alternating_check(sub));
        }
    }
}

TEST_CASE("join law on families and random graphs") {
    CHECK(join_euler_check(dandelion(3, 2)).ok);
    CHECK(join_euler_check(dandelion(3, 2)).chi_whole == -2);
    for (int n = 1; n <= 4; ++n) {
        JoinCheckResult r =
            join_euler_check(cartesian_product(linear_coherent(n), linear_coherent(1)));
        CHECK(r.ok);
        CHECK(r.chi_whole == ((n % 2 == 0) ? 1 : -1));  // a sphere of dimension n
    }
    CHECK(join_euler_check(tournament(5)).ok);  // single module, trivially

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 120; ++trial) {
        Digraph g = random_digraph(rng, 2, 7, 8);
        JoinCheckResult r = join_euler_check(g);
        CHECK(r.ok);
    }
}

TEST_CASE("region classification") {
    Digraph d32 = dandelion(3, 2);
    for (const auto& mod : decompose(d32).modules)
        CHECK(classify_region(d32, mod) == RegionClass::stable);
    Digraph t4 = tournament(4);
    CHECK(classify_region(t4, decompose(t4).modules[0]) != RegionClass::stable);
}
