#ifndef MPX_VERIFY_HPP
#define MPX_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "mpx/digraph.hpp"
#include "mpx/ints.hpp"

namespace mpx {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Deterministic random digraph: vertex count in [min_vertices,
/// max_vertices], then up to max_edges ordered pairs without replacement.
Digraph random_digraph(std::mt19937_64& rng, int min_vertices, int max_vertices,
                       int max_edges);

// The desk-scale verification battery. Each check is deterministic and
// self-contained; run_all_checks executes them in order.
CheckResult check_tournament7_homology();
CheckResult check_complete3_shape();
CheckResult check_matching_complete7_torsion();
CheckResult check_closed_forms_against_enumeration();
CheckResult check_generating_functions(const std::string& fixture_dir);
CheckResult check_module_decomposition();
CheckResult check_euler_double_entry();
CheckResult check_classifier_regression();
CheckResult check_incomplete_tournament_sweep();
CheckResult check_suspension_law();
CheckResult check_euler_maximality_conjecture();

std::vector<CheckResult> run_all_checks(const std::string& fixture_dir);

/// Prints one pass/fail line per check; returns the number of failures.
int print_report(const std::vector<CheckResult>& results, std::ostream& os);

/// chi(X(K_n)) >= chi(X(G)) over every digraph on n vertices (n <= 4
/// exhaustive; larger n sampled). Returns a counterexample description in
/// detail when the sweep refutes the inequality.
CheckResult conjecture_sweep(int n, int samples = 10000);

/// Experiment: hunt for decomposition modules whose complex has torsion
/// and report whether every one found is a stable region. Not an
/// assertion; torsion is rare at desk scale.
CheckResult torsion_conjecture_experiment(int max_edges, int samples);

/// One integer per line; '#' comments and blank lines ignored.
std::vector<Int> load_fixture(const std::string& path);

}  // namespace mpx

#endif
