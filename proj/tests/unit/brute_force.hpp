#pragma once

// Exhaustive reference computations used as independent oracles.

#include <cstdint>
#include <limits>
#include <vector>

#include "cutlab/graph.hpp"

namespace cutlab::oracle {

inline double brute_min_cut(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  double best = std::numeric_limits<double>::infinity();
  // Fix vertex n-1 outside S to enumerate each cut once.
  for (std::uint32_t bits = 1; bits < (1u << (n - 1)); ++bits) {
    double c = 0;
    for (const Edge& e : g.edges()) c += (((bits >> e.u) & 1u) != ((bits >> e.v) & 1u));
    best = std::min(best, c);
  }
  return best;
}

inline int brute_st_cut(const UndirectedGraph& g, Vertex s, Vertex t) {
  const std::size_t n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    if (!((bits >> s) & 1u) || ((bits >> t) & 1u)) continue;
    int c = 0;
    for (const Edge& e : g.edges()) c += (((bits >> e.u) & 1u) != ((bits >> e.v) & 1u));
    best = std::min(best, c);
  }
  return best;
}

inline double brute_directed_cut(const DirectedWeightedGraph& g, std::uint32_t bits) {
  double c = 0;
  for (const auto& e : g.edges())
    if (((bits >> e.from) & 1u) && !((bits >> e.to) & 1u)) c += e.weight;
  return c;
}

inline NodeSet set_from_bits(std::uint32_t bits, std::size_t n) {
  std::vector<Vertex> m;
  for (Vertex v = 0; v < n; ++v)
    if ((bits >> v) & 1u) m.push_back(v);
  return NodeSet(m);
}

}  // namespace cutlab::oracle
