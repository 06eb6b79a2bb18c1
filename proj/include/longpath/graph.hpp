#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace longpath {

using Vertex = std::uint32_t;

/// An edge (u, v). Directed graphs read it as tail -> head; undirected graphs
/// store it normalized with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge normalized(Edge e, bool directed) {
  if (!directed && e.v < e.u) std::swap(e.u, e.v);
  return e;
}

/// Dense key of an edge in [0, n^2).
inline std::uint64_t edge_key(Edge e, std::size_t n, bool directed) {
  const Edge x = normalized(e, directed);
  return static_cast<std::uint64_t>(x.u) * n + x.v;
}

inline Edge edge_from_key(std::uint64_t key, std::size_t n) {
  return Edge{static_cast<Vertex>(key / n), static_cast<Vertex>(key % n)};
}

class GraphError : public std::invalid_argument {
 public:
  GraphError(const std::string& what, Edge offending)
      : std::invalid_argument(what), edge_(offending) {}
  Edge edge() const noexcept { return edge_; }

 private:
  Edge edge_;
};

/// Average degree 2m/n kept as an exact fraction.
struct AverageDegree {
  std::uint64_t twice_edges = 0;
  std::uint64_t vertices = 0;

  double value() const { return vertices == 0 ? 0.0 : static_cast<double>(twice_edges) / vertices; }
  // degree <= d/2  <=>  2 * degree * n <= 2m
  bool at_most_half(std::uint64_t degree) const { return 2 * degree * vertices <= twice_edges; }
  // length >= d/3  <=>  3 * length * n >= 2m
  bool third_at_most(std::uint64_t length) const { return 3 * length * vertices >= twice_edges; }
};

struct DegreeStats {
  std::size_t min_degree = 0;
  AverageDegree average;
};

/// Immutable simple graph on vertices 0..n-1 with sorted CSR adjacency.
/// Out-neighbors for directed graphs; in-neighbors are kept as well.
class Graph {
 public:
  Graph() = default;

  /// Deduplicates; throws GraphError on an out-of-range endpoint or a self-loop.
  static Graph build(std::size_t n, std::span<const Edge> edges, bool directed);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool directed() const noexcept { return directed_; }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::span<const Vertex> in_neighbors(Vertex v) const noexcept {
    if (!directed_) return neighbors(v);
    return {in_adj_.data() + in_offsets_[v], in_adj_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  /// Undirected degree; in + out for directed graphs.
  std::size_t degree(Vertex v) const noexcept {
    return directed_ ? out_degree(v) + in_neighbors(v).size() : out_degree(v);
  }
  bool has_edge(Vertex u, Vertex v) const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> in_adj_;
};

DegreeStats degree_stats(const Graph& g);

struct PathWitness {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

enum class PathViolationKind { out_of_range, repeated_vertex, missing_edge, wrong_direction };

struct PathViolation {
  PathViolationKind kind;
  std::size_t position;  // index into the vertex list where the violation was detected
};

const char* to_string(PathViolationKind kind);

/// Empty result means the path is simple and every step is an edge of g
/// (traversed tail -> head when g is directed).
std::optional<PathViolation> validate_path(const Graph& g, const PathWitness& path);

/// Edges of the path in traversal order.
std::vector<Edge> path_edges(const PathWitness& path);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> original id (ascending)
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Keeps the vertex ids and drops every edge with an endpoint outside `keep`.
Graph restrict_to(const Graph& g, const std::vector<bool>& keep);

struct ContractedGraph {
  Graph graph;
  std::vector<Vertex> image;  // original id -> contracted id
};

/// Merges each pair into one vertex. Parallel edges collapse to one edge per
/// ordered pair (per unordered pair when undirected); an edge inside a pair
/// is dropped. Throws std::invalid_argument when pairs overlap.
ContractedGraph contract_pairs(const Graph& g, std::span<const std::pair<Vertex, Vertex>> pairs);

}  // namespace longpath
