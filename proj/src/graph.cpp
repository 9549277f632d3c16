#include "cutlab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "cutlab/error.hpp"

namespace cutlab {

NodeSet::NodeSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool NodeSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

NodeSet NodeSet::complement(std::size_t n) const {
  std::vector<Vertex> out;
  out.reserve(n > members_.size() ? n - members_.size() : 0);
  std::size_t j = 0;
  for (Vertex v = 0; v < n; ++v) {
    while (j < members_.size() && members_[j] < v) ++j;
    if (j < members_.size() && members_[j] == v) continue;
    out.push_back(v);
  }
  return NodeSet(std::move(out));
}

std::vector<std::uint8_t> NodeSet::mask(std::size_t n) const {
  std::vector<std::uint8_t> m(n, 0);
  for (Vertex v : members_) {
    require(v < n, ErrorCode::kInvalidArgument, "node set member out of range");
    m[v] = 1;
  }
  return m;
}

static std::uint64_t pair_key(Vertex a, Vertex b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

void DirectedWeightedGraph::add_edge(Vertex from, Vertex to, double weight) {
  require(from < n_ && to < n_, ErrorCode::kInvalidArgument, "edge endpoint out of range");
  require(from != to, ErrorCode::kInvalidArgument, "self-loop");
  require(std::isfinite(weight) && weight > 0.0, ErrorCode::kInvalidArgument,
          "edge weight must be finite and positive");
  if (!keys_.insert(pair_key(from, to)).second)
    fail(ErrorCode::kInvalidArgument,
         "duplicate directed edge " + std::to_string(from) + "->" + std::to_string(to));
  edges_.push_back({from, to, weight});
}

UndirectedGraph UndirectedGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  UndirectedGraph g(n);
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    require(e.u < n && e.v < n, ErrorCode::kInvalidArgument, "edge endpoint out of range");
    require(e.u != e.v, ErrorCode::kInvalidArgument, "self-loop");
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
    g.edges_.push_back(e);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    require(std::adjacent_find(list.begin(), list.end()) == list.end(),
            ErrorCode::kInvalidArgument, "multi-edge");
  }
  return g;
}

void UndirectedGraph::add_edge(Vertex u, Vertex v) {
  require(u < n_ && v < n_, ErrorCode::kInvalidArgument, "edge endpoint out of range");
  require(u != v, ErrorCode::kInvalidArgument, "self-loop");
  auto& lu = adjacency_[u];
  auto it = std::lower_bound(lu.begin(), lu.end(), v);
  require(it == lu.end() || *it != v, ErrorCode::kInvalidArgument, "multi-edge");
  lu.insert(it, v);
  auto& lv = adjacency_[v];
  lv.insert(std::lower_bound(lv.begin(), lv.end(), u), u);
  edges_.push_back({u, v});
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  Vertex other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

static void require_proper(const NodeSet& s, std::size_t n) {
  require(!s.empty() && s.size() < n, ErrorCode::kPrecondition,
          "cut side must be a proper nonempty subset");
  require(s.members().back() < n, ErrorCode::kInvalidArgument, "node set member out of range");
}

double cut_weight_masked(const DirectedWeightedGraph& g, std::span<const std::uint8_t> in_s) {
  double total = 0.0;
  for (const WeightedEdge& e : g.edges()) {
    if (in_s[e.from] && !in_s[e.to]) total += e.weight;
  }
  return total;
}

double cut_weight(const DirectedWeightedGraph& g, const NodeSet& s) {
  require_proper(s, g.vertex_count());
  auto m = s.mask(g.vertex_count());
  return cut_weight_masked(g, m);
}

std::size_t cut_size(const UndirectedGraph& g, const NodeSet& s) {
  require_proper(s, g.vertex_count());
  auto m = s.mask(g.vertex_count());
  std::size_t c = 0;
  for (const Edge& e : g.edges()) c += (m[e.u] != m[e.v]);
  return c;
}

bool nearly_equal(double a, double b, double rel) {
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= rel * scale;
}

static bool leq_tol(double a, double b) { return a <= b || nearly_equal(a, b); }

bool is_beta_balanced_exhaustive(const DirectedWeightedGraph& g, double beta) {
  const std::size_t n = g.vertex_count();
  require(n <= 20, ErrorCode::kSizeCap, "exhaustive balance check is capped at n <= 20");
  if (n < 2) return true;
  std::vector<std::uint8_t> in(n);
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t bits = 1; bits < full; ++bits) {
    for (std::size_t v = 0; v < n; ++v) in[v] = (bits >> v) & 1u;
    double fwd = 0.0;
    double bwd = 0.0;
    for (const WeightedEdge& e : g.edges()) {
      if (in[e.from] && !in[e.to]) fwd += e.weight;
      else if (!in[e.from] && in[e.to]) bwd += e.weight;
    }
    if (!leq_tol(fwd, beta * bwd)) return false;
  }
  return true;
}

double edge_reverse_ratio(const DirectedWeightedGraph& g) {
  std::unordered_map<std::uint64_t, double> w;
  w.reserve(g.edge_count() * 2);
  for (const WeightedEdge& e : g.edges()) w.emplace(pair_key(e.from, e.to), e.weight);
  double ratio = 0.0;
  for (const WeightedEdge& e : g.edges()) {
    auto it = w.find(pair_key(e.to, e.from));
    if (it == w.end()) return std::numeric_limits<double>::infinity();
    ratio = std::max(ratio, e.weight / it->second);
  }
  return ratio;
}

}  // namespace cutlab
