#ifndef MPX_HOMOLOGY_HPP
#define MPX_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "mpx/ints.hpp"
#include "mpx/simplicial.hpp"

namespace mpx {

/// Reduced integer homology, one Betti number and one torsion list per
/// degree. The empty complex is legal and reports chi = -1 with no groups.
struct HomologySummary {
    bool empty_complex = false;
    std::vector<long long> betti;                // degree d
    std::vector<std::vector<Int>> torsion;       // degree d, divisibility order

    long long betti_at(int d) const;
    const std::vector<Int>& torsion_at(int d) const;
    bool torsion_free() const;
    bool trivial() const;  // all groups zero (contractible profile)
    Int reduced_euler() const;

    HomologySummary shifted(int degrees) const;
    void normalize();  // trim trailing zero groups

    bool same_groups(const HomologySummary& other) const;
    std::string to_string() const;

    bool operator==(const HomologySummary&) const = default;
};

/// Reduced integer homology from Smith normal forms of the boundary
/// matrices; degree 0 uses the augmentation map.
HomologySummary reduced_homology(const SimplicialComplex& x);

/// Betti profile of an iterated join via the Kuenneth rule
/// b_n = sum_{i+j=n-1} b_i * b_j, applied pairwise. All inputs must be
/// torsion-free; throws std::invalid_argument otherwise. The join of an
/// empty list is the empty complex.
HomologySummary join_homology(const std::vector<HomologySummary>& pieces);

}  // namespace mpx

#endif
