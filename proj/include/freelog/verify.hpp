#ifndef FREELOG_VERIFY_HPP
#define FREELOG_VERIFY_HPP

#include <string>
#include <vector>

namespace freelog {

/// Outcome of one self-verification check. Checks cross-validate the whole
/// pipeline: enumeration against transfer matrices against generating
/// functions, exact Laurent data against predicted closed forms, and the
/// Gaussian limit via moments, interval probabilities, and sampling.
struct CheckResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
    double seconds;
};

/// Number of checks in the suite.
int acceptance_check_count();

/// Runs the full verification suite (ids 1..9) in order. Quick mode shrinks
/// the parameter ranges so the suite finishes in a few seconds; the full run
/// enforces the per-check time budgets as part of the pass criteria.
std::vector<CheckResult> run_acceptance_checks(bool quick);

/// One check by id (1..9); throws std::domain_error for unknown ids.
CheckResult run_acceptance_check(int id, bool quick);

}  // namespace freelog

#endif
