#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cutlab/graph.hpp"
#include "cutlab/local_query.hpp"
#include "cutlab/random.hpp"

namespace cutlab {

enum class FinalMode { kLog, kKappa };

struct EstimatorConfig {
  double eps = 0.2;
  double beta0 = 0.25;
  double c_kappa = 8.0;
  double c_sample = 1.0;
  double c_final = 2.0;
  double accept_fraction = 0.5;
  FinalMode final_mode = FinalMode::kLog;
  std::uint64_t seed = 1;

  void validate() const;
  /// kappa = C_kappa * ln n / eps^2
  double kappa(std::size_t n) const;
};

struct VerifyResult {
  bool accepted = false;
  bool early_reject = false;  // min degree below the threshold; no queries issued
  double k_hat = 0.0;
  double c_hat = 0.0;
  double p_hat = 0.0;
  double p_eff = 0.0;
  std::size_t sampled_edges = 0;
  std::uint64_t neighbor_queries = 0;
};

/// Sampling rate min(1, C_sample ln n / (eps^2 t)).
double sampling_rate(std::size_t n, double t, double eps, double c_sample);

/// Samples each ordered slot (v, i) with probability q through neighbor
/// queries and returns the deduplicated edge set.
std::vector<Edge> sample_edges(LocalGraphOracle& o, const std::vector<std::size_t>& degrees,
                               double q, Rng& rng);

VerifyResult verify_guess(LocalGraphOracle& o, const std::vector<std::size_t>& degrees, double t,
                          double eps, const EstimatorConfig& cfg, Rng& rng);

struct TraceEntry {
  double t = 0.0;
  double accuracy = 0.0;
  bool final_call = false;
  VerifyResult result;
};

struct Estimate {
  double k_hat = 0.0;
  bool exact_fallback = false;
  double t_accepted = 0.0;
  double t_final = 0.0;
  std::vector<TraceEntry> trace;
  QueryCounts counts;
};

/// Coarse halving search at accuracy beta0 from t = n/2 down to t = 1, then a
/// single refined call at accuracy eps.
Estimate estimate_min_cut(LocalGraphOracle& o, const EstimatorConfig& cfg);

std::string final_mode_name(FinalMode m);
FinalMode parse_final_mode(const std::string& s);

}  // namespace cutlab
