#include "longpath/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace longpath {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'", line);
  return value;
}

struct Header {
  bool directed = false;
  std::size_t n = 0;
};

// "# <kind> directed=<0|1> n=<n>"
Header parse_header(std::istream& in, std::string_view kind, std::size_t& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 4 || tokens[0] != "#" || tokens[1] != kind)
      throw ParseError("expected header '# " + std::string(kind) + " directed=<0|1> n=<n>'", line_no);
    Header h;
    if (tokens[2] == "directed=0") h.directed = false;
    else if (tokens[2] == "directed=1") h.directed = true;
    else throw ParseError("bad directed flag", line_no);
    if (!tokens[3].starts_with("n=")) throw ParseError("missing n=", line_no);
    h.n = parse_uint(tokens[3].substr(2), line_no);
    return h;
  }
  throw ParseError("missing header", line_no);
}

Vertex parse_vertex(std::string_view token, std::size_t n, std::size_t line) {
  const std::uint64_t v = parse_uint(token, line);
  if (v >= n) throw ParseError("vertex " + std::string(token) + " out of range", line);
  return static_cast<Vertex>(v);
}

template <typename Fn>
void open_and(const std::filesystem::path& file, std::ios::openmode mode, Fn&& fn) {
  std::fstream f(file, mode);
  if (!f) throw std::runtime_error("cannot open " + file.string());
  fn(f);
  if ((mode & std::ios::out) && !f) throw std::runtime_error("write failed: " + file.string());
}

}  // namespace

void write_graph(std::ostream& out, const Graph& g) {
  out << "# graph directed=" << (g.directed() ? 1 : 0) << " n=" << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_graph(std::istream& in) {
  std::size_t line_no = 0;
  const Header h = parse_header(in, "graph", line_no);
  std::vector<Edge> edges;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].starts_with('#')) continue;
    if (tokens.size() != 2) throw ParseError("expected 'u v'", line_no);
    const Edge e{parse_vertex(tokens[0], h.n, line_no), parse_vertex(tokens[1], h.n, line_no)};
    if (e.u == e.v) throw ParseError("self-loop", line_no);
    edges.push_back(e);
  }
  return Graph::build(h.n, edges, h.directed);
}

void write_stream(std::ostream& out, const EventStream& s) {
  out << "# stream directed=" << (s.directed ? 1 : 0) << " n=" << s.n << '\n';
  for (const StreamEvent& ev : s.events)
    out << (ev.kind == EventKind::insert ? '+' : '-') << ' ' << ev.edge.u << ' ' << ev.edge.v << '\n';
}

EventStream read_stream(std::istream& in) {
  std::size_t line_no = 0;
  const Header h = parse_header(in, "stream", line_no);
  EventStream s{h.n, h.directed, {}};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].starts_with('#')) continue;
    if (tokens.size() != 3 || (tokens[0] != "+" && tokens[0] != "-"))
      throw ParseError("expected '+ u v' or '- u v'", line_no);
    s.events.push_back({tokens[0] == "+" ? EventKind::insert : EventKind::remove,
                        {parse_vertex(tokens[1], h.n, line_no), parse_vertex(tokens[2], h.n, line_no)}});
  }
  return s;
}

void write_path(std::ostream& out, const PathWitness& p) {
  for (std::size_t i = 0; i < p.vertices.size(); ++i) out << (i ? " " : "") << p.vertices[i];
  out << '\n';
}

PathWitness read_path(std::istream& in) {
  PathWitness p;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    for (const auto t : tokens) p.vertices.push_back(static_cast<Vertex>(parse_uint(t, line_no)));
    break;
  }
  return p;
}

void save_graph(const std::filesystem::path& file, const Graph& g) {
  open_and(file, std::ios::out | std::ios::trunc, [&](std::ostream& f) { write_graph(f, g); });
}
Graph load_graph(const std::filesystem::path& file) {
  Graph g;
  open_and(file, std::ios::in, [&](std::istream& f) { g = read_graph(f); });
  return g;
}
void save_stream(const std::filesystem::path& file, const EventStream& s) {
  open_and(file, std::ios::out | std::ios::trunc, [&](std::ostream& f) { write_stream(f, s); });
}
EventStream load_stream(const std::filesystem::path& file) {
  EventStream s;
  open_and(file, std::ios::in, [&](std::istream& f) { s = read_stream(f); });
  return s;
}
void save_path(const std::filesystem::path& file, const PathWitness& p) {
  open_and(file, std::ios::out | std::ios::trunc, [&](std::ostream& f) { write_path(f, p); });
}
PathWitness load_path(const std::filesystem::path& file) {
  PathWitness p;
  open_and(file, std::ios::in, [&](std::istream& f) { p = read_path(f); });
  return p;
}

}  // namespace longpath
