#include "longpath/stream.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "longpath/rng.hpp"

namespace longpath {

bool EventStream::has_deletions() const noexcept {
  return std::any_of(events.begin(), events.end(), [](const StreamEvent& e) { return e.kind == EventKind::remove; });
}

EventStream graph_to_stream(const Graph& g, StreamOrder order, std::uint64_t seed) {
  EventStream s{g.vertex_count(), g.directed(), {}};
  s.events.reserve(g.edge_count());
  for (const Edge& e : g.edges()) s.events.push_back({EventKind::insert, e});
  if (order == StreamOrder::random) {
    Engine rng = make_engine(derive_seed(seed, SeedStream::order));
    shuffle(s.events, rng);
  }
  return s;
}

namespace {

bool bad_endpoints(const EventStream& s, const StreamEvent& ev) {
  return ev.edge.u >= s.n || ev.edge.v >= s.n || ev.edge.u == ev.edge.v;
}

}  // namespace

Graph apply_stream(const EventStream& s) {
  std::unordered_map<std::uint64_t, std::int64_t> multiplicity;
  multiplicity.reserve(s.events.size());
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    const StreamEvent& ev = s.events[i];
    if (bad_endpoints(s, ev)) throw StreamError("endpoint out of range or self-loop", i);
    auto& c = multiplicity[edge_key(ev.edge, s.n, s.directed)];
    if (ev.kind == EventKind::insert) {
      ++c;
    } else if (--c < 0) {
      throw StreamError("deletion of an edge with multiplicity 0", i);
    }
  }
  std::vector<Edge> edges;
  for (const auto& [key, count] : multiplicity)
    if (count > 0) edges.push_back(edge_from_key(key, s.n));
  return Graph::build(s.n, edges, s.directed);
}

const char* to_string(StreamViolationKind kind) {
  switch (kind) {
    case StreamViolationKind::bad_endpoint: return "bad endpoint";
    case StreamViolationKind::negative_multiplicity: return "negative multiplicity";
    case StreamViolationKind::multiplicity_bound: return "multiplicity above n^c";
  }
  return "unknown";
}

std::optional<StreamViolation> validate_stream(const EventStream& s, double exponent) {
  const double bound = std::pow(static_cast<double>(s.n), exponent);
  std::unordered_map<std::uint64_t, std::int64_t> multiplicity;
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    const StreamEvent& ev = s.events[i];
    if (bad_endpoints(s, ev)) return StreamViolation{StreamViolationKind::bad_endpoint, i};
    auto& c = multiplicity[edge_key(ev.edge, s.n, s.directed)];
    c += ev.kind == EventKind::insert ? 1 : -1;
    if (c < 0) return StreamViolation{StreamViolationKind::negative_multiplicity, i};
    if (static_cast<double>(c) > bound) return StreamViolation{StreamViolationKind::multiplicity_bound, i};
  }
  return std::nullopt;
}

EventStream add_decoys(const EventStream& s, const Graph& g, std::size_t count, std::uint64_t seed) {
  Engine rng = make_engine(derive_seed(seed, SeedStream::decoys));
  const std::size_t n = s.n;
  const std::uint64_t possible = s.directed ? n * (n - 1) : n * (n - 1) / 2;
  if (count + g.edge_count() > possible) throw std::invalid_argument("not enough non-edges for decoys");

  std::unordered_set<std::uint64_t> chosen;
  std::vector<Edge> decoys;
  while (decoys.size() < count) {
    const Edge e{static_cast<Vertex>(uniform_below(rng, n)), static_cast<Vertex>(uniform_below(rng, n))};
    if (e.u == e.v || g.has_edge(e.u, e.v) || (!s.directed && g.has_edge(e.v, e.u))) continue;
    if (!chosen.insert(edge_key(e, n, s.directed)).second) continue;
    decoys.push_back(normalized(e, s.directed));
  }

  struct Keyed {
    double key;
    std::size_t tie;
    StreamEvent ev;
  };
  std::vector<Keyed> merged;
  merged.reserve(s.events.size() + 2 * count);
  const double span = static_cast<double>(s.events.size() + 1);
  for (std::size_t i = 0; i < s.events.size(); ++i)
    merged.push_back({static_cast<double>(i) + 0.5, 0, s.events[i]});
  for (const Edge& e : decoys) {
    const double ins = uniform_unit(rng) * span;
    const double del = ins + uniform_unit(rng) * (span - ins);
    merged.push_back({ins, 1, {EventKind::insert, e}});
    merged.push_back({del, 2, {EventKind::remove, e}});
  }
  std::stable_sort(merged.begin(), merged.end(), [](const Keyed& a, const Keyed& b) {
    return a.key != b.key ? a.key < b.key : a.tie < b.tie;
  });

  EventStream out{s.n, s.directed, {}};
  out.events.reserve(merged.size());
  for (const Keyed& k : merged) out.events.push_back(k.ev);
  return out;
}

}  // namespace longpath
