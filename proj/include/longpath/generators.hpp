#pragma once

#include <cstdint>

#include "longpath/graph.hpp"

namespace longpath {

/// Erdos-Renyi G(n, p), undirected. Geometric skipping, O(n + m).
Graph gnp(std::size_t n, double p, std::uint64_t seed);

/// Random d-regular graph: circulant start, then 20*m degree-preserving
/// double-edge swaps. Requires n*d even and d < n.
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

struct PlantedPath {
  Graph graph;
  PathWitness path;  // Hamiltonian, so lp(graph) = n - 1
};

/// A random Hamiltonian path on n vertices plus uniformly chosen extra edges
/// up to m edges in total.
PlantedPath planted_path(std::size_t n, std::size_t m, std::uint64_t seed, bool directed = false);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph petersen_graph();

}  // namespace longpath
