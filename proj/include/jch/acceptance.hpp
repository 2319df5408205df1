#pragma once

#include <functional>
#include <string>
#include <vector>

namespace jch {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs the full property-based verification battery at desk scale and
/// reports one line per check. Emits through `sink` as results arrive so
/// long runs show progress; returns all results.
std::vector<CheckResult> run_verification(
    const std::function<void(const CheckResult&)>& sink);

/// true iff every check passed.
bool all_passed(const std::vector<CheckResult>&);

}  // namespace jch
