#pragma once

#include <string>
#include <vector>

#include "knot/cohom.hpp"

namespace knot {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// One of the acceptance criteria (1..10) as a list of named checks.
std::vector<CheckResult> run_criterion(int index, const CohOptions& opts = {});

std::vector<std::string> verify_suite_names();

/// Named verification sweeps driven by the CLI:
/// p3-classification, p3-pgroups, oracles, drakokhrust, p5-stretch.
std::vector<CheckResult> run_verify_suite(const std::string& suite,
                                          const CohOptions& opts = {});

}  // namespace knot
