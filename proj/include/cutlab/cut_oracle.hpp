#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cutlab/graph.hpp"
#include "cutlab/random.hpp"

namespace cutlab {

/// Cut-query contract standing in for a (1 +- eps) sketch.
class CutOracle {
 public:
  virtual ~CutOracle() = default;

  double query(const NodeSet& s) {
    count_.fetch_add(1, std::memory_order_relaxed);
    return do_query(s);
  }
  std::uint64_t query_count() const { return count_.load(std::memory_order_relaxed); }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  const DirectedWeightedGraph& graph() const { return graph_; }
  /// Declared multiplicative error; 0 for exact, NaN when only empirical.
  virtual double declared_eps() const = 0;
  virtual std::string describe() const = 0;

 protected:
  explicit CutOracle(const DirectedWeightedGraph& g) : graph_(g) {}
  virtual double do_query(const NodeSet& s) = 0;

  DirectedWeightedGraph graph_;

 private:
  std::atomic<std::uint64_t> count_{0};
};

class ExactOracle final : public CutOracle {
 public:
  explicit ExactOracle(const DirectedWeightedGraph& g) : CutOracle(g) {}
  double declared_eps() const override { return 0.0; }
  std::string describe() const override { return "exact"; }

 private:
  double do_query(const NodeSet& s) override;
};

enum class NoiseMode { kFresh, kHashed, kSigns };

struct NoiseSpec {
  double eps_prime = 0.0;
  NoiseMode mode = NoiseMode::kHashed;
  std::vector<int> signs;  // used in kSigns mode, cycled per call
};

class NoisyOracle final : public CutOracle {
 public:
  NoisyOracle(const DirectedWeightedGraph& g, NoiseSpec spec, std::uint64_t seed);
  double declared_eps() const override { return spec_.eps_prime; }
  std::string describe() const override;

 private:
  double do_query(const NodeSet& s) override;

  NoiseSpec spec_;
  std::uint64_t seed_;
  std::mutex mu_;
  Rng rng_;
  std::size_t sign_pos_ = 0;
};

/// Keeps each edge with probability p at weight w/p, decided once at construction.
class SparsifierOracle final : public CutOracle {
 public:
  SparsifierOracle(const DirectedWeightedGraph& g, double p, std::uint64_t seed);
  double declared_eps() const override;
  std::string describe() const override;
  std::size_t kept_edges() const { return sparse_.edge_count(); }

 private:
  double do_query(const NodeSet& s) override;

  double p_;
  DirectedWeightedGraph sparse_;
};

/// 64-bit hash of the canonical encoding of s (sorted members, 4-byte little endian).
std::uint64_t hash_node_set(const NodeSet& s, std::uint64_t seed);

struct OracleSpec {
  enum class Kind { kExact, kNoise, kSparsifier } kind = Kind::kExact;
  NoiseSpec noise;
  double keep_probability = 1.0;
  std::string text;
};

/// Parses `exact | noise:<eps'>[:fresh|hashed|signs=<+-..>] | sparsifier:<p>`.
OracleSpec parse_oracle_spec(const std::string& text);
std::unique_ptr<CutOracle> make_oracle(const DirectedWeightedGraph& g, const OracleSpec& spec,
                                       std::uint64_t seed);

}  // namespace cutlab
