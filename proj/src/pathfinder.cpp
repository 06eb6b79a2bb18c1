#include "longpath/pathfinder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "longpath/rng.hpp"

namespace longpath {

CoreResult peel_core(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("peel_core needs at least one edge");
  const std::size_t n = g.vertex_count();
  CoreResult out;
  out.threshold = degree_stats(g).average;

  std::vector<std::size_t> degree(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.emplace(degree[v], v);
  }
  out.in_core.assign(n, true);
  auto drop = [&](Vertex w) {
    if (!out.in_core[w]) return;
    queue.erase({degree[w], w});
    --degree[w];
    queue.emplace(degree[w], w);
  };
  while (!queue.empty()) {
    const auto [deg, v] = *queue.begin();
    if (!out.threshold.at_most_half(deg)) break;
    queue.erase(queue.begin());
    out.in_core[v] = false;
    out.removal_order.push_back(v);
    for (const Vertex w : g.neighbors(v)) drop(w);
    if (g.directed())
      for (const Vertex w : g.in_neighbors(v)) drop(w);
  }
  for (Vertex v = 0; v < n; ++v)
    if (out.in_core[v]) out.core.push_back(v);
  return out;
}

PathWitness greedy_extend(const Graph& allowed, Vertex start, std::size_t cap) {
  PathWitness p;
  if (start >= allowed.vertex_count() || cap == 0) return p;
  std::vector<char> visited(allowed.vertex_count(), 0);
  p.vertices.push_back(start);
  visited[start] = 1;
  while (p.vertices.size() < cap) {
    const auto nbrs = allowed.neighbors(p.vertices.back());
    const auto it = std::find_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return !visited[w]; });
    if (it == nbrs.end()) break;
    visited[*it] = 1;
    p.vertices.push_back(*it);
  }
  return p;
}

const char* to_string(ExtractMode mode) {
  switch (mode) {
    case ExtractMode::exact: return "exact";
    case ExtractMode::core_verify: return "core-verify";
    case ExtractMode::heuristic: return "heuristic";
  }
  return "unknown";
}

const char* to_string(RunMode mode) {
  switch (mode) {
    case RunMode::exact: return "exact";
    case RunMode::core_verify: return "core-verify";
    case RunMode::heuristic: return "heuristic";
    case RunMode::hybrid_exact: return "hybrid-exact";
    case RunMode::hybrid_sampled: return "hybrid-sampled";
  }
  return "unknown";
}

const char* to_string(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::automatic: return "auto";
    case SamplerKind::reservoir: return "reservoir";
    case SamplerKind::l0: return "l0";
  }
  return "unknown";
}

std::optional<ExtractMode> parse_extract_mode(const std::string& text) {
  if (text == "exact") return ExtractMode::exact;
  if (text == "core-verify") return ExtractMode::core_verify;
  if (text == "heuristic") return ExtractMode::heuristic;
  return std::nullopt;
}

namespace {

// Greedy from `start`, then (undirected only) reverse and keep extending from
// the old start. Never shorter than plain greedy.
PathWitness greedy_rerooted(const Graph& g, Vertex start) {
  PathWitness p = greedy_extend(g, start);
  if (g.directed() || p.vertices.size() < 2) return p;
  std::vector<char> visited(g.vertex_count(), 0);
  for (const Vertex v : p.vertices) visited[v] = 1;
  std::reverse(p.vertices.begin(), p.vertices.end());
  for (;;) {
    const auto nbrs = g.neighbors(p.vertices.back());
    const auto it = std::find_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return !visited[w]; });
    if (it == nbrs.end()) break;
    visited[*it] = 1;
    p.vertices.push_back(*it);
  }
  return p;
}

std::vector<Vertex> pick_starts(std::vector<Vertex> pool, std::size_t count, std::uint64_t seed) {
  Engine rng = make_engine(derive_seed(seed, SeedStream::extract));
  shuffle(pool, rng);
  if (pool.size() > count) pool.resize(count);
  return pool;
}

template <typename Walk>
PathWitness best_of(const std::vector<Vertex>& starts, Walk walk, bool parallel) {
  std::vector<PathWitness> paths(starts.size());
  const auto count = static_cast<std::int64_t>(starts.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) paths[i] = walk(starts[static_cast<std::size_t>(i)]);
  } else {
    for (std::int64_t i = 0; i < count; ++i) paths[i] = walk(starts[static_cast<std::size_t>(i)]);
  }
  PathWitness best;
  for (const PathWitness& p : paths)
    if (best.vertices.empty() || p.length() > best.length()) best = p;
  return best;
}

ExtractResult extract(const SampleF& f, std::size_t n, bool directed, const ExtractOptions& opt, bool parallel) {
  ExtractResult out;
  if (opt.mode == ExtractMode::core_verify) {
    if (!opt.oracle) throw std::invalid_argument("core-verify mode needs the oracle graph");
    const Graph& oracle = *opt.oracle;
    if (oracle.vertex_count() != n) throw std::invalid_argument("oracle graph has a different vertex count");
    if (oracle.edge_count() == 0) {
      out.path.vertices.assign(n ? 1 : 0, 0);
      return out;
    }
    const CoreResult core = peel_core(oracle);
    std::vector<Edge> kept;
    for (const Edge& e : f.edges)
      if (core.in_core[e.u] && core.in_core[e.v]) kept.push_back(e);
    const Graph allowed = Graph::build(n, kept, directed);
    const auto starts = pick_starts(core.core, opt.restarts, opt.seed);
    out.path = best_of(starts, [&](Vertex s) { return greedy_extend(allowed, s); }, parallel);
    return out;
  }

  const Graph gf = Graph::build(n, f.edges, directed);
  std::vector<Vertex> touched;
  for (Vertex v = 0; v < n; ++v)
    if (gf.degree(v) > 0) touched.push_back(v);
  auto heuristic = [&]() {
    if (touched.empty()) return PathWitness{std::vector<Vertex>(n ? 1 : 0, 0)};
    const auto starts = pick_starts(touched, opt.restarts, opt.seed);
    return best_of(starts, [&](Vertex s) { return greedy_rerooted(gf, s); }, parallel);
  };

  if (opt.mode == ExtractMode::heuristic) {
    out.path = heuristic();
    return out;
  }
  ExactResult exact = parallel ? exact_longest_path(gf, opt.budget) : [&] {
    return gf.vertex_count() <= bitmask_dp_limit ? exact_longest_path_serial(gf, opt.budget)
                                                  : exact_longest_path(gf, opt.budget);
  }();
  out.exact_complete = exact.complete;
  out.path = std::move(exact.path);
  if (!exact.complete) {
    PathWitness h = heuristic();
    if (h.length() > out.path.length()) out.path = std::move(h);
  }
  return out;
}

std::size_t resolve_k(const EventStream& s, const RunOptions& opt) {
  return opt.k ? opt.k : default_sample_size(s.n, opt.sample_constant);
}

}  // namespace

ExtractResult extract_path_from_sample(const SampleF& f, std::size_t n, bool directed, const ExtractOptions& opt) {
  return extract(f, n, directed, opt, true);
}

ExtractResult extract_path_serial(const SampleF& f, std::size_t n, bool directed, const ExtractOptions& opt) {
  return extract(f, n, directed, opt, false);
}

RunReport run_semi_streaming(const EventStream& s, const RunOptions& opt) {
  RunReport report;
  const std::size_t k = resolve_k(s, opt);
  SamplerKind kind = opt.sampler;
  if (kind == SamplerKind::automatic) kind = s.has_deletions() ? SamplerKind::l0 : SamplerKind::reservoir;

  SampleF f;
  if (kind == SamplerKind::reservoir) {
    f = reservoir_sample(s, k, opt.seed);
  } else {
    TurnstileSample t = sample_support_turnstile(s, k, opt.seed, opt.delta, opt.turnstile);
    f = std::move(t.sample);
    report.sketch_cells = t.sketch_cells;
  }
  report.sampler = kind;
  report.sample_target = k;
  report.sample_size = f.achieved();
  report.stored_edges = kind == SamplerKind::reservoir ? f.achieved() : 0;

  const ExtractOptions eo{opt.mode, opt.oracle, opt.restarts, opt.seed, opt.budget};
  ExtractResult r = extract_path_from_sample(f, s.n, s.directed, eo);
  report.path = std::move(r.path);
  report.exact_complete = r.exact_complete;
  report.mode = opt.mode == ExtractMode::exact       ? RunMode::exact
                : opt.mode == ExtractMode::heuristic ? RunMode::heuristic
                                                     : RunMode::core_verify;
  return report;
}

RunReport hybrid_run(const EventStream& s, std::size_t space, const RunOptions& opt) {
  const std::size_t k = resolve_k(s, opt);
  if (space < k) throw std::invalid_argument("hybrid space must be at least the sample size");

  std::optional<std::vector<Edge>> stored;
  std::size_t store_cells = 0;
  if (!s.has_deletions()) {
    std::unordered_set<std::uint64_t> keys;
    bool overflow = false;
    for (const StreamEvent& ev : s.events) {
      if (overflow) break;
      keys.insert(edge_key(ev.edge, s.n, s.directed));
      overflow = keys.size() > space;
    }
    if (!overflow) {
      std::vector<Edge> edges;
      for (const std::uint64_t key : keys) edges.push_back(edge_from_key(key, s.n));
      std::sort(edges.begin(), edges.end());
      stored = std::move(edges);
    }
  } else {
    SparseRecovery store(space + space / 2, static_cast<std::uint64_t>(s.n) * s.n,
                         derive_seed(opt.seed, SeedStream::sketch, 1));
    for (const StreamEvent& ev : s.events)
      store.update(edge_key(ev.edge, s.n, s.directed), ev.kind == EventKind::insert ? 1 : -1);
    store_cells = store.cell_count();
    if (auto decoded = store.decode(); decoded && decoded->size() <= space) {
      std::vector<Edge> edges;
      for (const auto& [key, count] : *decoded)
        if (count > 0) edges.push_back(edge_from_key(key, s.n));
      stored = std::move(edges);
    }
  }

  RunReport sampled = run_semi_streaming(s, opt);
  if (!stored) {
    sampled.mode = RunMode::hybrid_sampled;
    sampled.stored_edges += s.has_deletions() ? 0 : space;
    sampled.sketch_cells += store_cells;
    return sampled;
  }
  const Graph g = Graph::build(s.n, *stored, s.directed);
  ExactResult exact = exact_longest_path(g, opt.budget);
  RunReport report = sampled;
  report.mode = RunMode::hybrid_exact;
  report.exact_complete = exact.complete;
  report.stored_edges += stored->size();
  report.sketch_cells += store_cells;
  report.path = exact.path.length() >= sampled.path.length() ? std::move(exact.path) : sampled.path;
  return report;
}

}  // namespace longpath
