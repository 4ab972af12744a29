#pragma once

// Cross-module checks for a single exponent tuple: every closed formula is
// compared with the graph computation or the monomial oracle that it claims
// to summarize.

#include "singlat/exponent_tuple.hpp"

#include <string>
#include <vector>

namespace singlat::consistency {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs every check; a check that throws is recorded as failed with the error
// message. Errors raised while building the dual graph itself propagate.
std::vector<CheckResult> run_checks(const ExponentTuple& a);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace singlat::consistency
