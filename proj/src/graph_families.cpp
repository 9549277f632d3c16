#include "cutlab/graph_families.hpp"

#include "cutlab/error.hpp"
#include "cutlab/random.hpp"

namespace cutlab {

UndirectedGraph path_graph(std::size_t n) {
  UndirectedGraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

UndirectedGraph cycle_graph(std::size_t n) {
  require(n >= 3, ErrorCode::kInvalidArgument, "cycle needs n >= 3");
  return circulant_graph(n, 1);
}

UndirectedGraph complete_graph(std::size_t n) {
  UndirectedGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

UndirectedGraph circulant_graph(std::size_t n, std::size_t h) {
  require(h >= 1 && 2 * h < n, ErrorCode::kInvalidArgument, "circulant needs 1 <= h < n/2");
  UndirectedGraph g(n);
  for (std::size_t d = 1; d <= h; ++d)
    for (std::size_t v = 0; v < n; ++v) g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + d) % n));
  return g;
}

static void add_random_chords(UndirectedGraph& g, std::size_t chords, Rng& rng) {
  const std::size_t n = g.vertex_count();
  // Pairs among vertices 1..n-1 not yet joined.
  const std::size_t pool = (n - 1) * (n - 2) / 2;
  std::size_t used = 0;
  for (const Edge& e : g.edges()) used += (e.u != 0 && e.v != 0);
  require(chords <= (pool - used) / 2, ErrorCode::kInfeasible,
          "too many chords for n = " + std::to_string(n));
  std::size_t added = 0;
  while (added < chords) {
    const auto u = static_cast<Vertex>(1 + rng.below(n - 1));
    const auto v = static_cast<Vertex>(1 + rng.below(n - 1));
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(std::min(u, v), std::max(u, v));
    ++added;
  }
}

UndirectedGraph cycle_chords(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed) {
  require(k >= 2 && k % 2 == 0, ErrorCode::kInfeasible, "planted k must be even and >= 2");
  require(k < n, ErrorCode::kInfeasible, "planted k must be below n");
  require(m >= n * k / 2, ErrorCode::kInfeasible,
          "m must be at least n*k/2 = " + std::to_string(n * k / 2));
  UndirectedGraph g = circulant_graph(n, k / 2);
  Rng rng(seed);
  add_random_chords(g, m - n * k / 2, rng);
  return g;
}

UndirectedGraph cycle_with_random_chords(std::size_t n, std::size_t chords, std::uint64_t seed) {
  UndirectedGraph g = cycle_graph(n);
  Rng rng(seed);
  add_random_chords(g, chords, rng);
  return g;
}

UndirectedGraph clique_bridge(std::size_t n, std::size_t k) {
  require(n >= 4 && n % 2 == 0, ErrorCode::kInfeasible, "clique-bridge needs even n >= 4");
  const std::size_t h = n / 2;
  require(k >= 1 && k <= h, ErrorCode::kInfeasible, "clique-bridge needs 1 <= k <= n/2");
  UndirectedGraph g(n);
  for (std::size_t side = 0; side < 2; ++side)
    for (std::size_t u = 0; u < h; ++u)
      for (std::size_t v = u + 1; v < h; ++v)
        g.add_edge(static_cast<Vertex>(side * h + u), static_cast<Vertex>(side * h + v));
  for (std::size_t b = 0; b < k; ++b) g.add_edge(static_cast<Vertex>(b), static_cast<Vertex>(h + b));
  return g;
}

UndirectedGraph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  UndirectedGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

}  // namespace cutlab
