#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "longpath/graph.hpp"

namespace longpath {

inline constexpr std::uint64_t default_exact_budget = 100'000'000;
inline constexpr std::size_t bitmask_dp_limit = 20;

struct ExactResult {
  PathWitness path;
  bool complete = true;  // false: budget ran out, `path` is the best found so far
  std::uint64_t expansions = 0;
};

enum class ExactMethod { automatic, bitmask_dp, dfs };

/// Longest simple path. Bitmask DP up to 20 vertices (layers parallel over
/// masks of equal popcount), DFS with reachability pruning above.
ExactResult exact_longest_path(const Graph& g, std::uint64_t budget = default_exact_budget,
                               ExactMethod method = ExactMethod::automatic);

/// Serial reference for the bitmask DP, mask-ascending order.
ExactResult exact_longest_path_serial(const Graph& g, std::uint64_t budget = default_exact_budget);

/// Calls `visit` for every simple path with at least one edge, undirected
/// paths once per direction. Stops early (returning false) when `visit`
/// returns false or more than `budget` paths have been produced.
bool for_each_simple_path(const Graph& g, const std::function<bool(std::span<const Vertex>)>& visit,
                          std::uint64_t budget = default_exact_budget);

}  // namespace longpath
