// Acceptance battery: runs every desk-scale verification check, prints one
// pass/fail line per criterion and exits nonzero if any fail.

#include <iostream>

#include "mpx/verify.hpp"

int main() {
    auto results = mpx::run_all_checks(MPX_FIXTURE_DIR);
    int failures = mpx::print_report(results, std::cout);
    return failures ? 1 : 0;
}
