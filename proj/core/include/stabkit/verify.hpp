#pragma once

#include <string>
#include <vector>

#include "stabkit/catalog.hpp"

namespace stabkit {

struct CheckResult {
  std::string group;   // "C1".."C5" for the acceptance groups, "ex" for single examples
  std::string anchor;  // what is being replayed
  bool passed = false;
  std::string detail;  // computed values, or the failure message
  double seconds = 0;
};

/// Replays the reference computations against the catalog entries 9_46,
/// 6_1 and unknot, in a fixed order.
std::vector<CheckResult> run_verification(const Catalog& catalog);

/// One line per check: "PASS  C1  anchor  detail".
std::string format_verification(const std::vector<CheckResult>& results, bool timing = false);

}  // namespace stabkit
