#pragma once

#include <string>
#include <vector>

namespace moyaltorus {

// One row of the verification suite: the measured residual for a criterion,
// the tolerance it is held to, and a short human-readable detail string.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

// Runs the full 12-criterion verification suite with pinned parameters.
std::vector<CriterionResult> run_all();

// Formats one row as "PASS  3  star-exponential closed forms   2.1e-12 <= 1e-10 (...)".
std::string format_result(const CriterionResult& r);

}  // namespace moyaltorus
