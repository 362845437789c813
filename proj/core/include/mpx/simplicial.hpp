#ifndef MPX_SIMPLICIAL_HPP
#define MPX_SIMPLICIAL_HPP

#include <vector>

#include "mpx/digraph.hpp"
#include "mpx/snf.hpp"

namespace mpx {

/// Finite abstract simplicial complex with integer vertex labels. Faces
/// are stored sorted, grouped by dimension; the empty complex has
/// dimension -1.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    /// Builds from a set of nonempty faces (sorted label vectors). The
    /// input must already be downward closed; this is asserted cheaply by
    /// a sampled check in debug and fully by has_downward_closure().
    static SimplicialComplex from_faces(std::vector<std::vector<int>> faces);

    bool empty() const noexcept { return faces_.empty(); }
    int dimension() const noexcept { return static_cast<int>(faces_.size()) - 1; }

    /// Faces of dimension d, lexicographically sorted.
    const std::vector<std::vector<int>>& faces(int d) const;
    long long face_count(int d) const;
    std::vector<long long> f_vector() const;

    /// Index of a face within its dimension, or -1.
    long long face_index(const std::vector<int>& face) const;

    bool has_downward_closure() const;

    /// sum_{d>=-1} (-1)^d f_d with f_{-1}=1 for the empty simplex.
    long long reduced_euler() const;

    bool operator==(const SimplicialComplex&) const = default;

  private:
    std::vector<std::vector<std::vector<int>>> faces_;  // [dim][i]
};

/// X(G): faces are the nonempty multipath edge sets; vertices are edges.
SimplicialComplex multipath_complex(const Digraph& g);

/// M(G) for a simple undirected graph: faces are the nonempty matchings,
/// labelled by indices into the (normalised, sorted) edge list.
SimplicialComplex matching_complex(int vertex_count,
                                   std::vector<std::pair<int, int>> undirected_edges);

/// Every vertex is a source or a sink.
bool is_alternating(const Digraph& g);

/// True iff the orientation is alternating; when it is, additionally
/// asserts that X(G) equals the matching complex of the underlying
/// undirected graph face-for-face (throws std::logic_error otherwise).
bool complexes_isomorphic_alternating_check(const Digraph& g);

/// Simplicial boundary in degree d with alternating signs over the sorted
/// vertex labels. Degree 0 is the augmentation map onto the empty simplex.
SparseIntMatrix boundary_matrix(const SimplicialComplex& x, int d);

}  // namespace mpx

#endif
