#include "longpath/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "longpath/rng.hpp"

namespace longpath {

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0, 1]");
  std::vector<Edge> edges;
  if (n < 2 || p == 0.0) return Graph::build(n, edges, false);
  Engine rng = make_engine(derive_seed(seed, SeedStream::graph));
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const double log_q = std::log1p(-p);
  // Walk the pair index space with geometric gaps; pairs (u, v), u < v, in row order.
  std::uint64_t idx = 0;
  Vertex u = 0;
  std::uint64_t row_start = 0;
  for (;;) {
    if (p < 1.0) {
      const double r = uniform_unit(rng);
      const double gap = std::floor(std::log1p(-r) / log_q);
      if (gap >= static_cast<double>(total - idx)) break;
      idx += static_cast<std::uint64_t>(gap);
    }
    if (idx >= total) break;
    while (idx >= row_start + (n - 1 - u)) {
      row_start += n - 1 - u;
      ++u;
    }
    edges.push_back({u, static_cast<Vertex>(u + 1 + (idx - row_start))});
    ++idx;
  }
  return Graph::build(n, edges, false);
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d >= n || (n * d) % 2) throw std::invalid_argument("need d < n and n*d even");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t j = 1; j <= d / 2; ++j) edges.push_back(normalized({v, static_cast<Vertex>((v + j) % n)}, false));
  if (d % 2)
    for (Vertex v = 0; v < n / 2; ++v) edges.push_back({v, static_cast<Vertex>(v + n / 2)});
  std::unordered_set<std::uint64_t> present;
  for (const Edge& e : edges) present.insert(edge_key(e, n, false));

  Engine rng = make_engine(derive_seed(seed, SeedStream::graph));
  const std::size_t swaps = 20 * edges.size();
  for (std::size_t s = 0; s < swaps && edges.size() >= 2; ++s) {
    const std::size_t i = uniform_below(rng, edges.size());
    const std::size_t j = uniform_below(rng, edges.size());
    if (i == j) continue;
    Edge a = edges[i], b = edges[j];
    if (fair_coin(rng)) std::swap(b.u, b.v);
    const Edge x = normalized({a.u, b.u}, false), y = normalized({a.v, b.v}, false);
    if (x.u == x.v || y.u == y.v) continue;
    const std::uint64_t kx = edge_key(x, n, false), ky = edge_key(y, n, false);
    if (kx == ky || present.contains(kx) || present.contains(ky)) continue;
    present.erase(edge_key(a, n, false));
    present.erase(edge_key(edges[j], n, false));
    present.insert(kx);
    present.insert(ky);
    edges[i] = x;
    edges[j] = y;
  }
  return Graph::build(n, edges, false);
}

PlantedPath planted_path(std::size_t n, std::size_t m, std::uint64_t seed, bool directed) {
  const std::uint64_t possible = directed ? n * (n - 1) : n * (n - 1) / 2;
  if (n == 0 || m + 1 < n || m > possible) throw std::invalid_argument("edge count out of range for a planted path");
  Engine rng = make_engine(derive_seed(seed, SeedStream::graph));
  PlantedPath out;
  out.path.vertices.resize(n);
  for (Vertex v = 0; v < n; ++v) out.path.vertices[v] = v;
  shuffle(out.path.vertices, rng);

  std::unordered_set<std::uint64_t> present;
  std::vector<Edge> edges;
  auto add = [&](Edge e) {
    e = normalized(e, directed);
    if (present.insert(edge_key(e, n, directed)).second) edges.push_back(e);
  };
  for (std::size_t i = 0; i + 1 < n; ++i) add({out.path.vertices[i], out.path.vertices[i + 1]});
  while (edges.size() < m) {
    const Edge e{static_cast<Vertex>(uniform_below(rng, n)), static_cast<Vertex>(uniform_below(rng, n))};
    if (e.u != e.v) add(e);
  }
  out.graph = Graph::build(n, edges, directed);
  return out;
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::build(n, edges, false);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(normalized({v, static_cast<Vertex>((v + 1) % n)}, false));
  return Graph::build(n, edges, false);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::build(n, edges, false);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::build(leaves + 1, edges, false);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(normalized({i, static_cast<Vertex>((i + 1) % 5)}, false));
    edges.push_back({i, static_cast<Vertex>(i + 5)});
    edges.push_back(normalized({static_cast<Vertex>(5 + i), static_cast<Vertex>(5 + (i + 2) % 5)}, false));
  }
  return Graph::build(10, edges, false);
}

}  // namespace longpath
