#pragma once

#include <span>
#include <vector>

#include "cutlab/graph.hpp"

namespace cutlab {

struct MinCut {
  double value = 0.0;
  NodeSet witness;  // side containing vertex 0; empty when not requested
};

struct UndirectedWeightedEdge {
  Vertex u;
  Vertex v;
  double weight;
};

/// Exact global min-cut by maximum-adjacency orderings with edge contraction.
/// Disconnected input yields value 0 and the component of vertex 0.
/// Among equal-valued cuts discovered, the lexicographically smallest
/// witness (as a sorted vertex list) is kept.
MinCut global_min_cut(const UndirectedGraph& g, bool want_witness = true);
MinCut global_min_cut(std::size_t n, std::span<const UndirectedWeightedEdge> edges,
                      bool want_witness = true);
/// Requires w(u,v) == w(v,u) for every edge; the undirected weight is w(u,v).
MinCut global_min_cut(const DirectedWeightedGraph& g, bool want_witness = true);

/// Dense Stoer-Wagner, O(n^3). Reference implementation used for cross checks.
MinCut stoer_wagner_min_cut(const UndirectedGraph& g);

/// Max number of edge-disjoint u-v paths (unit-capacity Dinic).
int edge_connectivity(const UndirectedGraph& g, Vertex u, Vertex v);

/// min over all unordered pairs of edge_connectivity.
int min_pairwise_edge_connectivity(const UndirectedGraph& g);

/// Vertex -> component id (ids assigned in order of smallest member).
std::vector<Vertex> connected_components(const UndirectedGraph& g);

}  // namespace cutlab
