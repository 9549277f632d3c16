#pragma once

#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

namespace cutlab {

using Vertex = std::uint32_t;

/// Canonical vertex subset: sorted, deduplicated.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<Vertex> members);

  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  /// V \ this, for a vertex universe of size n.
  NodeSet complement(std::size_t n) const;

  /// Dense membership mask of length n.
  std::vector<std::uint8_t> mask(std::size_t n) const;

  friend bool operator==(const NodeSet&, const NodeSet&) = default;
  friend auto operator<=>(const NodeSet& a, const NodeSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Vertex> members_;
};

struct WeightedEdge {
  Vertex from;
  Vertex to;
  double weight;
};

/// Directed graph with positive finite weights, at most one edge per ordered
/// pair and no self-loops.
class DirectedWeightedGraph {
 public:
  explicit DirectedWeightedGraph(std::size_t n = 0) : n_(n) {}

  void add_edge(Vertex from, Vertex to, double weight);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const WeightedEdge> edges() const { return edges_; }

 private:
  std::size_t n_;
  std::vector<WeightedEdge> edges_;
  std::unordered_set<std::uint64_t> keys_;
};

struct Edge {
  Vertex u;
  Vertex v;
};

/// Simple undirected graph. Neighbor lists are kept in ascending order once
/// finalized.
class UndirectedGraph {
 public:
  explicit UndirectedGraph(std::size_t n = 0) : n_(n), adjacency_(n) {}

  /// Bulk construction; validates simplicity.
  static UndirectedGraph from_edges(std::size_t n, std::span<const Edge> edges);

  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Total weight of edges leaving s. Summed in ascending edge index.
double cut_weight(const DirectedWeightedGraph& g, const NodeSet& s);
/// Same, with a precomputed membership mask (no precondition checks).
double cut_weight_masked(const DirectedWeightedGraph& g, std::span<const std::uint8_t> in_s);

/// Number of undirected edges crossing s.
std::size_t cut_size(const UndirectedGraph& g, const NodeSet& s);

/// Every proper nonempty S satisfies w(S, V\S) <= beta * w(V\S, S). n <= 20.
bool is_beta_balanced_exhaustive(const DirectedWeightedGraph& g, double beta);

/// max over edges of w(u,v)/w(v,u); +infinity when some reverse edge is absent.
double edge_reverse_ratio(const DirectedWeightedGraph& g);

/// Relative comparison used throughout: |a-b| <= 1e-9 * max(1, |a|, |b|).
bool nearly_equal(double a, double b, double rel = 1e-9);

}  // namespace cutlab
