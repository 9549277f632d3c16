#include "cutlab/mincut_estimator.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "cutlab/error.hpp"
#include "cutlab/min_cut.hpp"

namespace cutlab {

void EstimatorConfig::validate() const {
  require(eps > 0.0 && eps < 1.0, ErrorCode::kInvalidArgument, "eps must lie in (0, 1)");
  require(beta0 > 0.0 && beta0 < 1.0, ErrorCode::kInvalidArgument, "beta0 must lie in (0, 1)");
  require(c_kappa >= 1.0, ErrorCode::kInvalidArgument, "C_kappa must be >= 1");
  require(c_sample > 0.0, ErrorCode::kInvalidArgument, "C_sample must be positive");
  require(c_final > 0.0, ErrorCode::kInvalidArgument, "C_final must be positive");
  require(accept_fraction > 0.0 && accept_fraction <= 1.0, ErrorCode::kInvalidArgument,
          "accept fraction must lie in (0, 1]");
}

double EstimatorConfig::kappa(std::size_t n) const {
  return c_kappa * std::log(static_cast<double>(std::max<std::size_t>(n, 2))) / (eps * eps);
}

double sampling_rate(std::size_t n, double t, double eps, double c_sample) {
  const double ln_n = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
  return std::min(1.0, c_sample * ln_n / (eps * eps * t));
}

std::vector<Edge> sample_edges(LocalGraphOracle& o, const std::vector<std::size_t>& degrees,
                               double q, Rng& rng) {
  std::vector<Edge> out;
  std::unordered_set<std::uint64_t> seen;
  auto take = [&](Vertex v, std::size_t i) {
    auto u = o.neighbor(v, i);
    if (!u) fail(ErrorCode::kInconsistentOracle, "neighbor query beyond reported degree");
    Vertex a = std::min(v, *u), b = std::max(v, *u);
    if (seen.insert((static_cast<std::uint64_t>(a) << 32) | b).second) out.push_back({a, b});
  };
  if (q <= 0.0) return out;
  if (q >= 1.0) {
    for (Vertex v = 0; v < degrees.size(); ++v)
      for (std::size_t i = 1; i <= degrees[v]; ++i) take(v, i);
    return out;
  }
  // Geometric skipping over the concatenated slot sequence.
  const double log_miss = std::log1p(-q);
  Vertex v = 0;
  std::size_t offset = 0;  // slots already passed in vertex v
  while (true) {
    const double u = 1.0 - rng.uniform();  // (0, 1]
    double skip = std::floor(std::log(u) / log_miss);
    while (v < degrees.size() && skip >= static_cast<double>(degrees[v] - offset)) {
      skip -= static_cast<double>(degrees[v] - offset);
      ++v;
      offset = 0;
    }
    if (v >= degrees.size()) break;
    offset += static_cast<std::size_t>(skip);
    take(v, offset + 1);
    ++offset;
  }
  std::sort(out.begin(), out.end(), [](const Edge& x, const Edge& y) {
    return x.u != y.u ? x.u < y.u : x.v < y.v;
  });
  return out;
}

VerifyResult verify_guess(LocalGraphOracle& o, const std::vector<std::size_t>& degrees, double t,
                          double eps, const EstimatorConfig& cfg, Rng& rng) {
  require(t >= 1.0, ErrorCode::kInvalidArgument, "guess t must be >= 1");
  require(eps > 0.0 && eps < 1.0, ErrorCode::kInvalidArgument, "accuracy must lie in (0, 1)");
  const std::size_t n = degrees.size();
  require(n == o.vertex_count(), ErrorCode::kInvalidArgument, "degree vector size mismatch");
  VerifyResult r;
  r.p_hat = sampling_rate(n, t, eps, cfg.c_sample);
  const double q = r.p_hat >= 1.0 ? 1.0 : 1.0 - std::sqrt(1.0 - r.p_hat);
  r.p_eff = 1.0 - (1.0 - q) * (1.0 - q);
  const double threshold = cfg.accept_fraction * t;
  const double d_min =
      n < 2 ? 0.0 : static_cast<double>(*std::min_element(degrees.begin(), degrees.end()));
  if (n < 2 || d_min < threshold) {
    r.early_reject = true;
    r.k_hat = d_min;
    return r;
  }
  const auto before = o.counts().neighbor;
  std::vector<Edge> edges = sample_edges(o, degrees, q, rng);
  r.neighbor_queries = o.counts().neighbor - before;
  r.sampled_edges = edges.size();
  std::vector<UndirectedWeightedEdge> weighted;
  weighted.reserve(edges.size());
  for (const Edge& e : edges) weighted.push_back({e.u, e.v, 1.0});
  r.c_hat = global_min_cut(n, weighted, false).value;
  r.k_hat = std::min(d_min, r.c_hat / r.p_eff);
  r.accepted = r.k_hat >= threshold;
  return r;
}

Estimate estimate_min_cut(LocalGraphOracle& o, const EstimatorConfig& cfg) {
  cfg.validate();
  const std::size_t n = o.vertex_count();
  require(n >= 2, ErrorCode::kPrecondition, "estimate_min_cut needs n >= 2");
  Rng rng(cfg.seed);
  std::vector<std::size_t> degrees(n);
  for (Vertex v = 0; v < n; ++v) degrees[v] = o.degree(v);

  Estimate est;
  double t = std::max(1.0, std::floor(static_cast<double>(n) / 2.0));
  bool accepted = false;
  while (true) {
    TraceEntry e{t, cfg.beta0, false, verify_guess(o, degrees, t, cfg.beta0, cfg, rng)};
    est.trace.push_back(e);
    if (e.result.accepted) {
      accepted = true;
      est.t_accepted = t;
      break;
    }
    if (t <= 1.0) break;
    t = std::max(1.0, std::floor(t / 2.0));
  }

  if (!accepted) {
    // Every guess down to t = 1 was rejected: confirm disconnection on the full graph.
    std::vector<Edge> all = sample_edges(o, degrees, 1.0, rng);
    std::vector<UndirectedWeightedEdge> weighted;
    for (const Edge& e : all) weighted.push_back({e.u, e.v, 1.0});
    est.exact_fallback = true;
    if (global_min_cut(n, weighted, false).value == 0.0) {
      est.k_hat = 0.0;
      est.counts = o.counts();
      return est;
    }
    fail(ErrorCode::kInconsistentOracle,
         "every guess down to t = 1 was rejected on a connected graph");
  }

  const double ln_n = std::log(static_cast<double>(n));
  double t_final = cfg.final_mode == FinalMode::kLog ? est.t_accepted / (cfg.c_final * ln_n)
                                                     : est.t_accepted / cfg.kappa(n);
  t_final = std::max(1.0, t_final);
  est.t_final = t_final;
  TraceEntry fin{t_final, cfg.eps, true, verify_guess(o, degrees, t_final, cfg.eps, cfg, rng)};
  est.trace.push_back(fin);
  est.k_hat = fin.result.k_hat;
  est.counts = o.counts();
  return est;
}

std::string final_mode_name(FinalMode m) { return m == FinalMode::kLog ? "log" : "kappa"; }

FinalMode parse_final_mode(const std::string& s) {
  if (s == "log") return FinalMode::kLog;
  if (s == "kappa") return FinalMode::kKappa;
  fail(ErrorCode::kInvalidArgument, "final mode must be log or kappa, got " + s);
}

}  // namespace cutlab
