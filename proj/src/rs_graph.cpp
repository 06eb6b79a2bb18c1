#include "longpath/rs_graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "longpath/io.hpp"
#include "longpath/rng.hpp"

namespace longpath {

Graph RSGraph::base() const {
  std::vector<Edge> edges;
  for (const auto& m : matchings) edges.insert(edges.end(), m.begin(), m.end());
  return Graph::build(2 * n, edges, false);
}

const char* to_string(RSViolationKind kind) {
  switch (kind) {
    case RSViolationKind::not_bipartite: return "not bipartite";
    case RSViolationKind::not_a_partition: return "matchings do not partition the edge set";
    case RSViolationKind::not_a_matching: return "not a matching";
    case RSViolationKind::unequal_sizes: return "matchings differ in size";
    case RSViolationKind::not_induced: return "matching is not induced";
  }
  return "unknown";
}

namespace {

std::string edge_text(Edge e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

}  // namespace

std::optional<RSViolation> verify_rs_decomposition(const Graph& g, std::size_t n,
                                                   const std::vector<std::vector<Edge>>& matchings) {
  if (g.directed() || g.vertex_count() != 2 * n)
    return RSViolation{RSViolationKind::not_bipartite, 0, "expected an undirected graph on 2n vertices"};
  for (const Edge& e : g.edges())
    if ((e.u < n) == (e.v < n)) return RSViolation{RSViolationKind::not_bipartite, 0, edge_text(e)};

  std::vector<Edge> all;
  for (const auto& m : matchings)
    for (const Edge& e : m) all.push_back(normalized(e, false));
  std::sort(all.begin(), all.end());
  const auto ge = g.edges();
  if (std::adjacent_find(all.begin(), all.end()) != all.end() || !std::equal(all.begin(), all.end(), ge.begin(), ge.end()))
    return RSViolation{RSViolationKind::not_a_partition, 0, "union differs from E or repeats an edge"};

  for (std::size_t i = 0; i < matchings.size(); ++i) {
    std::vector<Vertex> vs;
    for (const Edge& e : matchings[i]) {
      vs.push_back(e.u);
      vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      return RSViolation{RSViolationKind::not_a_matching, i, "shared endpoint"};
    if (matchings[i].size() != matchings.front().size())
      return RSViolation{RSViolationKind::unequal_sizes, i, std::to_string(matchings[i].size())};
    const InducedSubgraph sub = induced_subgraph(g, vs);
    if (sub.graph.edge_count() != matchings[i].size())
      return RSViolation{RSViolationKind::not_induced, i,
                         std::to_string(sub.graph.edge_count()) + " edges induced by " +
                             std::to_string(matchings[i].size()) + " matching edges"};
  }
  return std::nullopt;
}

RSGraph trivial_rs(std::size_t n, std::size_t r) {
  if (r == 0 || r > n) throw std::invalid_argument("need 1 <= r <= n");
  RSGraph rs{n, {{}}};
  for (Vertex i = 0; i < r; ++i) rs.matchings[0].push_back({i, static_cast<Vertex>(n + i)});
  return rs;
}

namespace {

class Decomposer {
 public:
  Decomposer(const Graph& g, std::size_t t) : g_(g), t_(t), size_(g.edge_count() / t), groups_(t) {}

  bool run() { return place(0); }
  std::vector<std::vector<Edge>> result() const { return groups_; }

 private:
  // e can join a group when it shares no endpoint with the group's edges and
  // no edge of g joins e to one of them.
  bool compatible(const std::vector<Edge>& group, Edge e) const {
    for (const Edge& f : group) {
      if (e.u == f.u || e.v == f.v || e.u == f.v || e.v == f.u) return false;
      if (g_.has_edge(e.u, f.v) || g_.has_edge(f.u, e.v)) return false;
    }
    return true;
  }

  bool place(std::size_t idx) {
    const auto edges = g_.edges();
    if (idx == edges.size()) return true;
    bool tried_empty = false;
    for (auto& group : groups_) {
      if (group.size() == size_) continue;
      if (group.empty()) {
        if (tried_empty) continue;  // empty groups are interchangeable
        tried_empty = true;
      }
      if (!compatible(group, edges[idx])) continue;
      group.push_back(edges[idx]);
      if (place(idx + 1)) return true;
      group.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::size_t t_;
  std::size_t size_;
  std::vector<std::vector<Edge>> groups_;
};

}  // namespace

std::optional<RSGraph> decompose_rs(const Graph& g, std::size_t n) {
  if (g.vertex_count() != 2 * n || g.vertex_count() > 16) throw std::invalid_argument("decompose_rs handles up to 16 vertices");
  const std::size_t m = g.edge_count();
  if (m == 0) return std::nullopt;
  for (const Edge& e : g.edges())
    if ((e.u < n) == (e.v < n)) return std::nullopt;
  for (std::size_t t = 1; t <= m; ++t) {
    if (m % t) continue;
    Decomposer d(g, t);
    if (d.run()) return RSGraph{n, d.result()};
  }
  return std::nullopt;
}

RSGraph random_small_rs(std::size_t n, std::size_t edges, std::size_t min_t, std::uint64_t seed) {
  if (edges > n * n) throw std::invalid_argument("too many edges for the bipartite sides");
  for (std::uint64_t attempt = 0;; ++attempt) {
    Engine rng = make_engine(derive_seed(seed, SeedStream::graph, attempt));
    std::vector<std::uint32_t> cells(n * n);
    for (std::uint32_t i = 0; i < cells.size(); ++i) cells[i] = i;
    shuffle(cells, rng);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < edges; ++i)
      es.push_back({static_cast<Vertex>(cells[i] / n), static_cast<Vertex>(n + cells[i] % n)});
    const Graph g = Graph::build(2 * n, es, false);
    if (auto rs = decompose_rs(g, n); rs && rs->t() >= min_t) return *rs;
    if (attempt > 100000) throw std::runtime_error("no RS decomposition found");
  }
}

void write_rs(std::ostream& out, const RSGraph& rs) {
  out << "# graph directed=0 n=" << 2 * rs.n << '\n';
  out << "# rs n=" << rs.n << '\n';
  for (std::size_t i = 0; i < rs.matchings.size(); ++i) {
    out << "# matching " << i + 1 << '\n';
    for (const Edge& e : rs.matchings[i]) out << e.u << ' ' << e.v << '\n';
  }
}

RSGraph read_rs(std::istream& in) {
  RSGraph rs;
  std::string line;
  std::size_t line_no = 0;
  bool have_n = false;
  auto number = [&](const std::string& text) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) throw ParseError("bad number '" + text + "'", line_no);
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string a, b, c;
    if (!(ls >> a)) continue;
    if (a == "#") {
      ls >> b >> c;
      if (b == "rs" && c.starts_with("n=")) {
        rs.n = number(c.substr(2));
        have_n = true;
      } else if (b == "matching") {
        if (number(c) != rs.matchings.size() + 1) throw ParseError("matchings must be numbered 1, 2, ...", line_no);
        rs.matchings.emplace_back();
      }
      continue;
    }
    if (!(ls >> b) || (ls >> c)) throw ParseError("expected 'a b'", line_no);
    if (!have_n || rs.matchings.empty()) throw ParseError("edge before '# rs' header or '# matching' marker", line_no);
    const Edge e{static_cast<Vertex>(number(a)), static_cast<Vertex>(number(b))};
    if (e.u >= rs.n || e.v < rs.n || e.v >= 2 * rs.n) throw ParseError("edge must join A=[0,n) to B=[n,2n)", line_no);
    rs.matchings.back().push_back(e);
  }
  if (!have_n) throw ParseError("missing '# rs n=<n>' header", line_no);
  return rs;
}

void save_rs(const std::filesystem::path& file, const RSGraph& rs) {
  std::ofstream f(file);
  if (!f) throw std::runtime_error("cannot open " + file.string());
  write_rs(f, rs);
}

RSGraph load_rs(const std::filesystem::path& file) {
  std::ifstream f(file);
  if (!f) throw std::runtime_error("cannot open " + file.string());
  return read_rs(f);
}

}  // namespace longpath
