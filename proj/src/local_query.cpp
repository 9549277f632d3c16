#include "cutlab/local_query.hpp"

#include "cutlab/error.hpp"

namespace cutlab {

std::size_t AdjacencyOracle::do_degree(Vertex v) {
  require(v < g_.vertex_count(), ErrorCode::kInvalidArgument, "vertex out of range");
  return g_.degree(v);
}

std::optional<Vertex> AdjacencyOracle::do_neighbor(Vertex v, std::size_t i) {
  require(v < g_.vertex_count(), ErrorCode::kInvalidArgument, "vertex out of range");
  auto nb = g_.neighbors(v);
  if (i == 0 || i > nb.size()) return std::nullopt;
  return nb[i - 1];
}

bool AdjacencyOracle::do_adjacent(Vertex u, Vertex v) {
  require(u < g_.vertex_count() && v < g_.vertex_count(), ErrorCode::kInvalidArgument,
          "vertex out of range");
  return g_.has_edge(u, v);
}

QueryCounts query_cost_report(const LocalGraphOracle& o) { return o.counts(); }

}  // namespace cutlab
