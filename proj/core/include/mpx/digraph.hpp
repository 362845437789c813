#ifndef MPX_DIGRAPH_HPP
#define MPX_DIGRAPH_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace mpx {

struct Edge {
    int source = 0;
    int target = 0;
    auto operator<=>(const Edge&) const = default;
};

/// Finite simple directed graph on vertices 0..n-1. Immutable after
/// construction: no loops, no duplicate edges, edge list kept sorted.
class Digraph {
  public:
    Digraph() = default;
    Digraph(int vertex_count, std::vector<Edge> edges);

    static Digraph from_pairs(int vertex_count,
                              const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(int index) const { return edges_.at(index); }

    /// Index of edge (u,v), or -1.
    int edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    int in_degree(int v) const { return static_cast<int>(in_edges_.at(v).size()); }
    int out_degree(int v) const { return static_cast<int>(out_edges_.at(v).size()); }
    const std::vector<int>& in_edges(int v) const { return in_edges_.at(v); }
    const std::vector<int>& out_edges(int v) const { return out_edges_.at(v); }

    /// Connectivity of the underlying undirected graph, isolated vertices
    /// included.
    bool weakly_connected() const;

    /// Strongly connected component id per vertex (Tarjan, iterative).
    /// Ids are 0-based in reverse topological order of components.
    std::vector<int> scc_ids() const;

    bool is_acyclic() const;

    /// Underlying simple undirected edge set; bidirectional pairs merge.
    std::vector<std::pair<int, int>> underlying_undirected() const;

    std::string to_dot() const;

    bool operator==(const Digraph& other) const = default;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_edges_;
    std::vector<std::vector<int>> in_edges_;
};

enum class Orient : unsigned char { forward, backward };

/// One symbol per edge of an underlying undirected path or cycle.
using OrientationWord = std::vector<Orient>;

OrientationWord word_from_string(const std::string& s);  // 'f'/'b' characters

// Graph families. Parameters follow the family's conventional indexing:
// linear/alternating/polygon count edges, dandelion counts leaves.
Digraph linear_coherent(int edge_count);
Digraph linear_alternating(int edge_count);
Digraph polygon_coherent(int edge_count);
Digraph linear_from_word(const OrientationWord& w);
Digraph polygon_from_word(const OrientationWord& w);
Digraph dandelion(int in_leaves, int out_leaves);
Digraph complete(int n);
Digraph tournament(int n);
Digraph reversed_tournament(int n);
Digraph complete_bipartite(int n, int m);

/// Transitive tournament on vertices 0..n with every out-edge of each
/// listed vertex removed. Indices must be strictly increasing.
Digraph incomplete_tournament(int n, const std::vector<int>& removed);

/// Caterpillar tree: spine path with legs[i] pendant vertices at spine
/// vertex i, oriented alternately so every vertex is a source or a sink
/// and spine vertex 0 is a source.
Digraph caterpillar(const std::vector<int>& legs);

Digraph cone(const Digraph& g);
Digraph suspension(const Digraph& g);

/// Box product: edges ((u,a),(v,a)) for (u,v) in G and ((u,a),(u,b)) for
/// (a,b) in H. Vertex (u,a) maps to u*|V(H)|+a.
Digraph cartesian_product(const Digraph& g, const Digraph& h);

Digraph disjoint_union(const Digraph& g, const Digraph& h);

/// Subgraph spanned by the given edges, vertices relabelled to the
/// support in increasing order.
Digraph subgraph_from_edges(const Digraph& g, const std::vector<int>& edge_ids);

}  // namespace mpx

#endif
