#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "cutlab/mincut_estimator.hpp"

namespace cutlab {

struct ConstantPreset {
  std::string name = "desk";
  double foreach_c1 = 2.0;
  double foreach_c2 = 0.25;
  double forall_c = 0.05;
  double forall_c1 = 0.1;
  double forall_c2 = 0.5;
  double c_kappa = 8.0;
  double c_sample = 1.0;
  double c_final = 2.0;
  double beta0 = 0.25;
  std::uint64_t enum_cap = 20000;
  std::uint64_t repetitions = 5;
  double promise_fraction = 1.0 / 1000.0;
  double accept_fraction = 0.5;
  std::string final_mode = "log";

  nlohmann::json to_json() const;
  /// Applies one key=value override; unknown keys are an error.
  void set(const std::string& key, const std::string& value);
  EstimatorConfig estimator(double eps, std::uint64_t seed) const;
};

ConstantPreset desk_preset();
ConstantPreset paper_preset();
ConstantPreset preset_by_name(const std::string& name);

/// Flat `key = value` text; `#` starts a comment.
void apply_constants_text(ConstantPreset& p, const std::string& text);
void apply_constants_file(ConstantPreset& p, const std::string& path);

}  // namespace cutlab
