#pragma once

// Named verification suites: each runs an independent cross-check and reports the
// achieved error against its target. Used by `isq verify` and the acceptance binary.

#include <string>
#include <vector>

#include "isq/run_config.hpp"

namespace isq::verify {

struct Check {
  std::string name;
  double achieved = 0.0;
  double target = 0.0;
  bool pass = false;  // achieved <= target (>= for negative controls)
  std::string detail;
  bool numerical_failure = false;  // failed by non-convergence rather than by tolerance
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
};

/// weighted-resolvent, eigenvalue-count, spiral, bound-states, log-ground-state,
/// hankel-involution, hankel-factorization, resolvent-representations, similarity,
/// moeller, phase, holomorphy.
const std::vector<std::string>& suite_names();

/// Throws Usage for an unknown suite. Numerical errors inside a check fail that check.
SuiteResult run_suite(const std::string& name, const RunConfig& cfg = {});

}  // namespace isq::verify
