#ifndef MPX_MULTIPATH_HPP
#define MPX_MULTIPATH_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "mpx/digraph.hpp"

namespace mpx {

/// Edge-index subset of a digraph whose spanned subgraph is a disjoint
/// union of simple directed paths. Stored sorted.
struct Multipath {
    std::vector<int> edges;

    int length() const noexcept { return static_cast<int>(edges.size()); }
    bool operator==(const Multipath&) const = default;
};

/// size-then-lexicographic order used everywhere enumeration output is
/// exposed, so results are byte-for-byte reproducible.
bool multipath_less(const Multipath& a, const Multipath& b);

/// True iff within the selected edges every vertex has indegree <= 1 and
/// outdegree <= 1 and no directed cycle arises. Throws on a bad index.
bool is_multipath(const Digraph& g, const std::vector<int>& edge_ids);

/// All multipaths including the empty one, in size-then-lex order.
/// max_count 0 means unbounded; exceeding a nonzero bound throws
/// std::length_error. threads > 1 shards the search tree by first edge;
/// the merged result does not depend on the thread count.
std::vector<Multipath> enumerate_multipaths(const Digraph& g,
                                            std::uint64_t max_count = 0,
                                            int threads = 1);

/// counts[l] = number of multipaths with l edges; streaming, no storage.
std::vector<long long> count_by_length(const Digraph& g);

long long count_multipaths(const Digraph& g);

/// Counts until the total would exceed cap; returns min(count, cap + 1).
/// Lets callers size-gate huge complexes without paying for a full count.
long long count_multipaths_up_to(const Digraph& g, long long cap);

/// sum over all multipaths of (-1)^length, streaming.
long long signed_multipath_count(const Digraph& g);

/// Multipaths with no proper multipath superset: the facets of the
/// multipath complex.
std::vector<Multipath> maximal_multipaths(const Digraph& g);

/// Visit every multipath once (including the empty one) without storing
/// them; used by the streaming counters.
void for_each_multipath(const Digraph& g,
                        const std::function<void(const std::vector<int>&)>& visit);

}  // namespace mpx

#endif
