#ifndef MPX_FORMULAS_HPP
#define MPX_FORMULAS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mpx/ints.hpp"

namespace mpx {

/// Named memo table from integer parameter tuples to exact integers.
class IntegerTable {
  public:
    explicit IntegerTable(std::string name) : name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }
    std::optional<Int> lookup(const std::vector<int>& key) const;
    void store(const std::vector<int>& key, Int value);

  private:
    std::string name_;
    std::map<std::vector<int>, Int> values_;
};

Int factorial(int n);
Int binomial(int n, int k);

/// Stirling numbers of the second kind; 0 for k > n.
Int stirling2(int n, int k);

/// Lah numbers C(n-1,k-1) * n!/k!; 0 for k > n.
Int lah(int n, int k);

Int bell(int n);

// Closed-form reduced Euler characteristics of the multipath complexes of
// the classical families. Each is cross-checked against enumeration in the
// test suites.
Int chi_complete(int n);             // complete digraph, n >= 1
Int chi_tournament(int n);           // transitive tournament, n >= 1
Int chi_reversed_tournament(int n);  // one reversed edge, n >= 3

/// Complete bipartite K_{n,m}. Degenerate sides (n or m zero) have no
/// edges, so the complex is empty and the value is -1; with that boundary
/// the recurrence chi(n,m) = chi(n-1,m) - m*chi(n-1,m-1) holds verbatim.
Int chi_bipartite(int n, int m);
bool chi_bipartite_recurrence_check(int n, int m);

/// Weighted subset sum sum(a_i) + sum over index subsets of size >= 2 of
/// (i2-i1)(i3-i2)...(il-i_{l-1}) * a_{i1}...a_{il}; counts the spheres of
/// caterpillar matching complexes.
Int L_poly(const std::vector<Int>& a);

/// Sphere counts for grid classifications: q = 2^((m+2)/2) for even m and
/// the combined count ((m+3)/2) * q(m+1) for odd m; s = 2^(floor((m+3)/2)).
struct WedgeCounts {
    Int q;
    Int s;
};
WedgeCounts wedge_counts_qs(int m);

}  // namespace mpx

#endif
