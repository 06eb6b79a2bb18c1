#pragma once

// Brute-force references shared by the unit and acceptance tests. They use
// an adjacency matrix and plain recursion, nothing from the solver.

#include <cstdint>
#include <vector>

#include "longpath/graph.hpp"

namespace oracle {

struct Matrix {
  std::size_t n = 0;
  std::vector<char> adj;  // adj[u * n + v]: edge u -> v (both ways when undirected)

  bool operator()(std::size_t u, std::size_t v) const { return adj[u * n + v] != 0; }
};

inline Matrix matrix(const longpath::Graph& g) {
  Matrix m{g.vertex_count(), std::vector<char>(g.vertex_count() * g.vertex_count(), 0)};
  for (const auto& e : g.edges()) {
    m.adj[e.u * m.n + e.v] = 1;
    if (!g.directed()) m.adj[e.v * m.n + e.u] = 1;
  }
  return m;
}

namespace detail {
inline void extend(const Matrix& m, std::vector<char>& used, std::size_t at, std::size_t len, std::size_t& best) {
  if (len > best) best = len;
  for (std::size_t v = 0; v < m.n; ++v) {
    if (used[v] || !m(at, v)) continue;
    used[v] = 1;
    extend(m, used, v, len + 1, best);
    used[v] = 0;
  }
}
}  // namespace detail

/// Longest simple path length in edges, by trying every start.
inline std::size_t longest_path(const longpath::Graph& g) {
  const Matrix m = matrix(g);
  std::size_t best = 0;
  std::vector<char> used(m.n, 0);
  for (std::size_t s = 0; s < m.n; ++s) {
    used[s] = 1;
    detail::extend(m, used, s, 0, best);
    used[s] = 0;
  }
  return best;
}

/// Number of simple paths with at least one edge, counted per direction.
inline std::uint64_t count_paths(const longpath::Graph& g) {
  const Matrix m = matrix(g);
  std::uint64_t count = 0;
  std::vector<char> used(m.n, 0);
  auto rec = [&](auto&& self, std::size_t at) -> void {
    for (std::size_t v = 0; v < m.n; ++v) {
      if (used[v] || !m(at, v)) continue;
      ++count;
      used[v] = 1;
      self(self, v);
      used[v] = 0;
    }
  };
  for (std::size_t s = 0; s < m.n; ++s) {
    used[s] = 1;
    rec(rec, s);
    used[s] = 0;
  }
  return count;
}

}  // namespace oracle
