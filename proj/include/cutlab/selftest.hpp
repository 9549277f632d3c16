#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cutlab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

struct SelftestOptions {
  /// Reduced sizes; criterion 8 then checks accuracy only.
  bool quick = false;
  unsigned jobs = 1;
  std::uint64_t seed = 20240601;
  std::vector<int> only;  // empty = all nine
};

using CriterionCallback = std::function<void(const CriterionResult&)>;

/// Runs the acceptance criteria in order; a criterion passes only if its
/// property holds and it finished inside its time limit.
std::vector<CriterionResult> run_selftest(const SelftestOptions& opt,
                                          const CriterionCallback& on_result = {});

std::string format_result(const CriterionResult& r);

}  // namespace cutlab
