#pragma once

// Named reproduction scenarios with embedded expected results.

#include "frobcoh/report.hpp"
#include "frobcoh/theorems.hpp"

#include <string>
#include <vector>

namespace frobcoh {

struct ScenarioResult {
  std::string target;
  std::string description;
  Json expected;
  Json actual;
  std::vector<std::string> diff;  // empty iff the scenario reproduced exactly
  std::vector<TheoremInstance> instances;

  bool passed() const { return diff.empty(); }
};

/// corrigendum-error, remark-2, corollary-table, pluricanonical.
const std::vector<std::string>& reproduction_targets();

/// Throws InvalidArgument for unknown targets.
ScenarioResult run_reproduction(const std::string& target);

}  // namespace frobcoh
