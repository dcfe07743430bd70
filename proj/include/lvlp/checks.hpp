#pragma once

#include <string>
#include <vector>

namespace lvlp {

enum class CheckLevel { kQuick, kFull };

CheckLevel parse_check_level(const std::string& name);

struct CheckResult {
  std::string name;  ///< invariant name, e.g. "residual.zero-initial"
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Cross-module invariant suite. Quick runs symbolic work to order 6; full
/// runs residuals to order 10 and odd-vanishing to order 45. Golden values
/// come from `golden_path` (data/golden.json by default).
std::vector<CheckResult> run_checks(CheckLevel level, const std::string& golden_path);

std::string default_golden_path();

}  // namespace lvlp
