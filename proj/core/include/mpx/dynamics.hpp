#ifndef MPX_DYNAMICS_HPP
#define MPX_DYNAMICS_HPP

#include <string>
#include <vector>

#include "mpx/digraph.hpp"
#include "mpx/homology.hpp"
#include "mpx/ints.hpp"

namespace mpx {

enum class Stability { stable, unstable };

/// Stable when indegree or outdegree is zero; isolated vertices are
/// stable by convention.
Stability vertex_stability(const Digraph& g, int v);

/// Edge subset of a digraph together with the derived data the region
/// conditions are phrased in: vertex support, complement, boundary, size.
struct RegionView {
    RegionView(const Digraph& g, std::vector<int> edge_ids);

    const Digraph& digraph() const noexcept { return *g_; }
    const std::vector<int>& edges() const noexcept { return edges_; }
    const std::vector<int>& complement_edges() const noexcept { return complement_; }
    const std::vector<int>& support() const noexcept { return support_; }
    const std::vector<int>& boundary() const noexcept { return boundary_; }
    /// Number of non-boundary vertices.
    int size() const noexcept { return static_cast<int>(support_.size() - boundary_.size()); }

    bool spans_connected_subgraph() const;
    int region_in_degree(int v) const;
    int region_out_degree(int v) const;
    int complement_in_degree(int v) const;
    int complement_out_degree(int v) const;

  private:
    const Digraph* g_;
    std::vector<int> edges_, complement_, support_, boundary_;
    std::vector<char> member_;
};

struct RegionCheck {
    bool ok = false;
    std::string reason;  // violated clause and witness when not ok
};

/// Dynamical-region test: every boundary vertex must be unstable in the
/// ambient digraph but stable in both the region and its complement, and
/// no region edge may lie on a directed cycle leaving the region (cycles
/// live inside strongly connected components, so the test saturates per
/// component). Throws std::invalid_argument for an empty or disconnected
/// edge set.
RegionCheck is_dynamical_region(const Digraph& g, const std::vector<int>& region_edges);

/// The least edge set containing e closed under (1) absorbing edges that
/// share a source or a target with a member and (2) absorbing every edge
/// of a directed cycle through a member. This is the unique minimal
/// dynamical region containing e.
std::vector<int> module_of_edge(const Digraph& g, int e);

struct ModuleDecomposition {
    /// Disjoint edge sets covering E(G), ordered by smallest edge index.
    std::vector<std::vector<int>> modules;
};

ModuleDecomposition decompose(const Digraph& g);

enum class RegionClass { stable, unstable, mixed };
RegionClass classify_region(const Digraph& g, const std::vector<int>& region_edges);

struct JoinCheckResult {
    bool ok = false;
    Int chi_whole = 0;
    Int chi_join = 0;
    bool betti_checked = false;
    std::string detail;
};

/// Verifies chi(X(G)) = (-1)^(k-1) * prod chi(X(M_i)) over the module
/// decomposition and, when every module homology is torsion-free and the
/// whole complex is small enough to build, that the Betti numbers of X(G)
/// agree with the iterated-join profile.
JoinCheckResult join_euler_check(const Digraph& g, long long direct_face_limit = 200000);

}  // namespace mpx

#endif
