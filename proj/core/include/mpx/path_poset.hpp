#ifndef MPX_PATH_POSET_HPP
#define MPX_PATH_POSET_HPP

#include <vector>

#include "mpx/digraph.hpp"
#include "mpx/ints.hpp"
#include "mpx/multipath.hpp"

namespace mpx {

/// All multipaths of a digraph ordered by edge-set containment. Element 0
/// is the empty multipath, the unique minimum. The order is not
/// materialised; queries are set containment.
class PathPoset {
  public:
    explicit PathPoset(const Digraph& g);

    const Digraph& digraph() const noexcept { return g_; }
    const std::vector<Multipath>& elements() const noexcept { return elements_; }
    int size() const noexcept { return static_cast<int>(elements_.size()); }

    bool leq(int a, int b) const;  // containment of edge sets

    /// Moebius value mu(bottom, element), computed by the recursive
    /// definition with memoisation. Every interval from the bottom is a
    /// Boolean lattice, so this must come out as (-1)^length; the shortcut
    /// is deliberately not used here so that fact stays testable.
    Int mobius_from_bottom(int element) const;
    Int mobius_from_bottom(const Multipath& m) const;

  private:
    Digraph g_;
    std::vector<Multipath> elements_;
};

/// -sum of mu(bottom, p) over the whole poset.
Int chi_via_mobius(const Digraph& g);

/// Alternating sum sum_{l>=0} (-1)^(l+1) * count_by_length[l]; streaming,
/// usable on digraphs whose poset would not fit in memory.
Int chi_via_fvector(const Digraph& g);

/// Reduced Euler characteristic of the multipath complex. Computes both
/// routes and throws std::logic_error if they ever disagree.
Int reduced_euler_characteristic(const Digraph& g);

}  // namespace mpx

#endif
