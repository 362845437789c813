#ifndef MPX_HOMOTOPY_HPP
#define MPX_HOMOTOPY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mpx/digraph.hpp"
#include "mpx/homology.hpp"

namespace mpx {

/// Symbolic homotopy type in normal form: the empty complex (the
/// (-1)-sphere), a point, a wedge of spheres, or an unclassified complex
/// carrying its homology. Closed under join, wedge and suspension.
class HomotopyType {
  public:
    enum class Kind { empty, contractible, wedge, unknown };

    static HomotopyType empty_type();
    static HomotopyType contractible();
    static HomotopyType sphere(int dim);
    /// Multiset of sphere dimensions; an empty multiset normalises to the
    /// contractible type.
    static HomotopyType wedge_of_spheres(std::map<int, long long> spheres);
    static HomotopyType unknown(HomologySummary h);
    /// Torsion-free homology read back as a wedge profile.
    static HomotopyType wedge_from_homology(const HomologySummary& h);

    Kind kind() const noexcept { return kind_; }
    bool is_empty() const noexcept { return kind_ == Kind::empty; }
    bool is_contractible() const noexcept { return kind_ == Kind::contractible; }
    bool is_wedge() const noexcept { return kind_ == Kind::wedge; }
    const std::map<int, long long>& spheres() const { return spheres_; }
    long long sphere_count() const;

    /// Reduced homology profile implied by the normal form.
    HomologySummary homology() const;
    Int reduced_euler() const;

    std::string to_string() const;
    bool operator==(const HomotopyType&) const = default;

  private:
    Kind kind_ = Kind::contractible;
    std::map<int, long long> spheres_;
    std::optional<HomologySummary> homology_;
};

/// Join normal form: the empty type is the unit, a point absorbs
/// everything, spheres add dimensions plus one, wedges distribute. An
/// unknown operand is joined at the homology level against a sphere
/// wedge; joining two unknowns throws std::invalid_argument.
HomotopyType join(const HomotopyType& a, const HomotopyType& b);
HomotopyType join(const std::vector<HomotopyType>& factors);
HomotopyType wedge(const std::vector<HomotopyType>& parts);
HomotopyType suspend(const HomotopyType& a);

// Family classifiers. Every one of them is validated against the homology
// oracle by the regression suites; none is trusted blind.

/// Alternating path on v vertices: empty for v=1, a point when
/// v = 2 mod 3, otherwise a sphere of dimension ceil((v-4)/3).
HomotopyType classify_alternating_path(int vertex_count);

/// Any oriented line: decompose into alternating-path modules and join.
HomotopyType classify_linear(const OrientationWord& w);

/// Any oriented cycle: a coherent polygon with n edges is S^(n-2); an
/// alternating one follows the cycle matching complex case split on
/// n mod 3; otherwise the runs of stable vertices between unstable ones
/// give alternating-path factors (a run of length zero makes the whole
/// complex contractible).
HomotopyType classify_polygon(const OrientationWord& w);

/// Coherent grid I_n x I_m.
HomotopyType classify_grid_II(int n, int m);

/// Alternating grid A_n x I_m, n,m >= 1.
HomotopyType classify_grid_AI(int n, int m);

/// Caterpillar with the given leg counts under the alternating
/// orientation. Covered shapes reduce to an odd spine with legs only at
/// odd positions and are counted by L_poly; anything else falls back to
/// the homology oracle as an unknown.
HomotopyType classify_caterpillar(const std::vector<int>& legs);

/// L x I_1 for an oriented line L: decompose into caterpillar modules,
/// classify each, and join.
HomotopyType classify_LxI1(const OrientationWord& w);

HomotopyType classify_dandelion(int n, int m);

/// Homology-backed: computes the Betti profile of the transitive
/// tournament's complex, insists it is torsion-free (std::domain_error
/// otherwise), and checks the Euler characteristic against the closed
/// form.
HomotopyType tournament_homotopy(int n);

enum class LawCheck { skipped, pass, fail };

/// Compares the homology of the suspension's complex against the
/// degree-shifted homology of the original, for digraphs that are weakly
/// connected and have a vertex of outdegree zero with positive indegree.
LawCheck suspension_law_check(const Digraph& g);

struct OracleComparison {
    bool match = false;
    std::string detail;
};

/// Checks a symbolic type against exact homology. Complexes larger than
/// direct_face_limit are handled through the module decomposition: exact
/// homology of every module joined by the Kuenneth rule.
OracleComparison compare_with_oracle(const HomotopyType& type, const Digraph& g,
                                     long long direct_face_limit = 120000);

/// Oracle-side homology of X(G) with the same size guard.
HomologySummary oracle_homology(const Digraph& g, long long direct_face_limit = 120000);

}  // namespace mpx

#endif
