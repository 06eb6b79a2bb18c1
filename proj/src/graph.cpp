#include "longpath/graph.hpp"

#include <algorithm>
#include <numeric>

namespace longpath {

namespace {

void fill_csr(std::size_t n, std::span<const Edge> edges, bool reverse, bool both,
              std::vector<std::size_t>& offsets, std::vector<Vertex>& adj) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++offsets[(reverse ? e.v : e.u) + 1];
    if (both) ++offsets[e.v + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  adj.resize(offsets[n]);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    if (reverse) {
      adj[cursor[e.v]++] = e.u;
    } else {
      adj[cursor[e.u]++] = e.v;
      if (both) adj[cursor[e.v]++] = e.u;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(adj.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              adj.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
}

}  // namespace

Graph Graph::build(std::size_t n, std::span<const Edge> edges, bool directed) {
  Graph g;
  g.n_ = n;
  g.directed_ = directed;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v), e);
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u), e);
    g.edges_.push_back(normalized(e, directed));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  fill_csr(n, g.edges_, false, !directed, g.offsets_, g.adj_);
  if (directed) fill_csr(n, g.edges_, true, false, g.in_offsets_, g.in_adj_);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= n_ || v >= n_) return false;
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  stats.average = {2 * static_cast<std::uint64_t>(g.edge_count()), g.vertex_count()};
  if (g.vertex_count() == 0) return stats;
  stats.min_degree = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) stats.min_degree = std::min(stats.min_degree, g.degree(v));
  return stats;
}

const char* to_string(PathViolationKind kind) {
  switch (kind) {
    case PathViolationKind::out_of_range: return "out-of-range vertex";
    case PathViolationKind::repeated_vertex: return "repeated vertex";
    case PathViolationKind::missing_edge: return "missing edge";
    case PathViolationKind::wrong_direction: return "wrong direction";
  }
  return "unknown";
}

std::optional<PathViolation> validate_path(const Graph& g, const PathWitness& path) {
  std::vector<bool> seen(g.vertex_count(), false);
  const auto& vs = path.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= g.vertex_count()) return PathViolation{PathViolationKind::out_of_range, i};
    if (seen[vs[i]]) return PathViolation{PathViolationKind::repeated_vertex, i};
    seen[vs[i]] = true;
    if (i == 0) continue;
    if (!g.has_edge(vs[i - 1], vs[i])) {
      const bool reversed = g.directed() && g.has_edge(vs[i], vs[i - 1]);
      return PathViolation{reversed ? PathViolationKind::wrong_direction : PathViolationKind::missing_edge, i};
    }
  }
  return std::nullopt;
}

std::vector<Edge> path_edges(const PathWitness& path) {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < path.vertices.size(); ++i) out.push_back({path.vertices[i - 1], path.vertices[i]});
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph result;
  result.original.assign(vertices.begin(), vertices.end());
  std::sort(result.original.begin(), result.original.end());
  result.original.erase(std::unique(result.original.begin(), result.original.end()), result.original.end());

  constexpr Vertex absent = ~Vertex{0};
  std::vector<Vertex> relabel(g.vertex_count(), absent);
  for (std::size_t i = 0; i < result.original.size(); ++i) relabel[result.original[i]] = static_cast<Vertex>(i);

  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (relabel[e.u] != absent && relabel[e.v] != absent) kept.push_back({relabel[e.u], relabel[e.v]});
  result.graph = Graph::build(result.original.size(), kept, g.directed());
  return result;
}

Graph restrict_to(const Graph& g, const std::vector<bool>& keep) {
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (keep[e.u] && keep[e.v]) kept.push_back(e);
  return Graph::build(g.vertex_count(), kept, g.directed());
}

ContractedGraph contract_pairs(const Graph& g, std::span<const std::pair<Vertex, Vertex>> pairs) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> partner(n);
  std::iota(partner.begin(), partner.end(), Vertex{0});
  std::vector<bool> used(n, false);
  for (const auto& [x, y] : pairs) {
    if (x >= n || y >= n || x == y) throw std::invalid_argument("invalid contraction pair");
    if (used[x] || used[y]) throw std::invalid_argument("contraction pairs overlap");
    used[x] = used[y] = true;
    partner[std::max(x, y)] = std::min(x, y);
  }

  ContractedGraph result;
  result.image.assign(n, 0);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (partner[v] == v) result.image[v] = next++;
  for (Vertex v = 0; v < n; ++v) result.image[v] = result.image[partner[v]];

  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const Edge c{result.image[e.u], result.image[e.v]};
    if (c.u != c.v) edges.push_back(c);
  }
  result.graph = Graph::build(next, edges, g.directed());
  return result;
}

}  // namespace longpath
