#pragma once

#include <atomic>
#include <cstdint>
#include <optional>

#include "cutlab/graph.hpp"

namespace cutlab {

struct QueryCounts {
  std::uint64_t degree = 0;
  std::uint64_t neighbor = 0;
  std::uint64_t adjacency = 0;
  friend bool operator==(const QueryCounts&, const QueryCounts&) = default;
};

/// Degree / i-th neighbor / adjacency access to a hidden simple graph.
class LocalGraphOracle {
 public:
  virtual ~LocalGraphOracle() = default;

  virtual std::size_t vertex_count() const = 0;

  std::size_t degree(Vertex v) {
    degree_.fetch_add(1, std::memory_order_relaxed);
    return do_degree(v);
  }
  /// i is 1-based; empty when i is 0 or exceeds the degree.
  std::optional<Vertex> neighbor(Vertex v, std::size_t i) {
    neighbor_.fetch_add(1, std::memory_order_relaxed);
    return do_neighbor(v, i);
  }
  bool adjacent(Vertex u, Vertex v) {
    adjacency_.fetch_add(1, std::memory_order_relaxed);
    return do_adjacent(u, v);
  }

  QueryCounts counts() const {
    return {degree_.load(), neighbor_.load(), adjacency_.load()};
  }

 protected:
  virtual std::size_t do_degree(Vertex v) = 0;
  virtual std::optional<Vertex> do_neighbor(Vertex v, std::size_t i) = 0;
  virtual bool do_adjacent(Vertex u, Vertex v) = 0;

 private:
  std::atomic<std::uint64_t> degree_{0};
  std::atomic<std::uint64_t> neighbor_{0};
  std::atomic<std::uint64_t> adjacency_{0};
};

/// Neighbor lists in ascending vertex order.
class AdjacencyOracle final : public LocalGraphOracle {
 public:
  explicit AdjacencyOracle(UndirectedGraph g) : g_(std::move(g)) {}
  std::size_t vertex_count() const override { return g_.vertex_count(); }
  const UndirectedGraph& graph() const { return g_; }

 protected:
  std::size_t do_degree(Vertex v) override;
  std::optional<Vertex> do_neighbor(Vertex v, std::size_t i) override;
  bool do_adjacent(Vertex u, Vertex v) override;

 private:
  UndirectedGraph g_;
};

QueryCounts query_cost_report(const LocalGraphOracle& o);

}  // namespace cutlab
