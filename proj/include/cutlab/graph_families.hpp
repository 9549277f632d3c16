#pragma once

#include <cstdint>

#include "cutlab/graph.hpp"

namespace cutlab {

UndirectedGraph path_graph(std::size_t n);
UndirectedGraph cycle_graph(std::size_t n);
UndirectedGraph complete_graph(std::size_t n);
/// C_n(1..h): vertex v joined to v +- 1..h (mod n).
UndirectedGraph circulant_graph(std::size_t n, std::size_t h);

/// Circulant with edge connectivity k (k even) plus m - n*k/2 uniformly random
/// chords that never touch vertex 0, so the global min-cut is exactly k.
UndirectedGraph cycle_chords(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed);

/// Cycle C_n plus `chords` random chords avoiding vertex 0 (min-cut 2).
UndirectedGraph cycle_with_random_chords(std::size_t n, std::size_t chords, std::uint64_t seed);

/// Two copies of K_{n/2} joined by k vertex-disjoint edges.
UndirectedGraph clique_bridge(std::size_t n, std::size_t k);

/// Erdos-Renyi G(n, p).
UndirectedGraph random_gnp(std::size_t n, double p, std::uint64_t seed);

}  // namespace cutlab
