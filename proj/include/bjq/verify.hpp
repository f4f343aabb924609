#pragma once

#include <string>
#include <vector>

#include "bjq/quantize.hpp"

namespace bjq {

struct CheckResult {
    std::string name;
    std::string coverage;  // human-readable degree range
    bool pass;
    std::string witness;  // failing counterexample, empty on pass
};

/// Runs the exact symbolic identity suite up to max_degree:
/// the commutator sum forms, the three Born-Jordan monomial forms, the
/// pure-power and qp rules, the bracket identities, the reduced Dirac
/// condition on split observables, operator symmetry for real observables,
/// and the two conflicting Dirac-rule operators for q^2 p^2.
/// inject_defect corrupts one Born-Jordan coefficient (a negative-control
/// fixture; the suite must then report a failure).
std::vector<CheckResult> run_verification(int max_degree, bool inject_defect = false);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace bjq
