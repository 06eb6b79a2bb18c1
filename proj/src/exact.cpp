#include "longpath/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace longpath {

namespace {

PathWitness single_vertex(const Graph& g) {
  PathWitness p;
  if (g.vertex_count() > 0) p.vertices.push_back(0);
  return p;
}

// in_mask[v]: vertices u with an edge u -> v.
std::vector<std::uint32_t> in_masks(const Graph& g) {
  std::vector<std::uint32_t> out(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (const Vertex u : g.in_neighbors(v)) out[v] |= std::uint32_t{1} << u;
  return out;
}

std::uint32_t end_set(std::uint32_t mask, const std::vector<std::uint32_t>& dp,
                      const std::vector<std::uint32_t>& in) {
  std::uint32_t ends = 0;
  for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const std::uint32_t prev = mask ^ (std::uint32_t{1} << v);
    if (prev == 0 || (dp[prev] & in[v])) ends |= std::uint32_t{1} << v;
  }
  return ends;
}

PathWitness rebuild(std::uint32_t mask, const std::vector<std::uint32_t>& dp, const std::vector<std::uint32_t>& in) {
  std::vector<Vertex> reversed;
  int v = std::countr_zero(dp[mask]);
  for (;;) {
    reversed.push_back(static_cast<Vertex>(v));
    const std::uint32_t prev = mask ^ (std::uint32_t{1} << v);
    if (prev == 0) break;
    v = std::countr_zero(dp[prev] & in[v]);
    mask = prev;
  }
  return PathWitness{{reversed.rbegin(), reversed.rend()}};
}

ExactResult bitmask_dp(const Graph& g, std::uint64_t budget, bool parallel) {
  const std::size_t n = g.vertex_count();
  if (n > bitmask_dp_limit) throw std::invalid_argument("bitmask DP is limited to 20 vertices");
  ExactResult result;
  result.path = single_vertex(g);
  if (n == 0) return result;

  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  const auto in = in_masks(g);
  std::vector<std::uint32_t> dp(std::size_t{full} + 1, 0);
  std::uint32_t best_mask = 1;
  int best_count = 1;

  if (!parallel) {
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
      if (++result.expansions > budget) {
        result.complete = false;
        break;
      }
      dp[mask] = end_set(mask, dp, in);
      const int c = std::popcount(mask);
      if (dp[mask] && c > best_count) {
        best_count = c;
        best_mask = mask;
      }
    }
  } else {
    // masks bucketed by popcount, each bucket in increasing order
    std::vector<std::vector<std::uint32_t>> layers(n + 1);
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) layers[std::popcount(mask)].push_back(mask);
    for (int layer = 1; layer <= static_cast<int>(n); ++layer) {
      const auto& masks = layers[layer];
      if (result.expansions + masks.size() > budget) {
        result.complete = false;
        break;
      }
      result.expansions += masks.size();
      const auto size = static_cast<std::int64_t>(masks.size());
#pragma omp parallel for schedule(static)
      for (std::int64_t i = 0; i < size; ++i) dp[masks[i]] = end_set(masks[i], dp, in);
      const auto hit = std::find_if(masks.begin(), masks.end(), [&](std::uint32_t m) { return dp[m] != 0; });
      if (hit == masks.end()) break;  // no path with `layer` vertices, so none longer either
      best_count = layer;
      best_mask = *hit;
    }
  }
  // Serial order may have finished a layer partially; any nonempty mask of the
  // best popcount is a valid optimum either way.
  if (!parallel) {
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask)
      if (std::popcount(mask) == best_count && dp[mask]) {
        best_mask = mask;
        break;
      }
  }
  result.path = rebuild(best_mask, dp, in);
  return result;
}

// Largest weakly connected component size minus one bounds lp from above.
std::size_t component_bound(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::size_t best = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::size_t size = 0;
    comp[s] = static_cast<int>(s);
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++size;
      auto visit = [&](Vertex w) {
        if (comp[w] < 0) {
          comp[w] = static_cast<int>(s);
          stack.push_back(w);
        }
      };
      for (const Vertex w : g.neighbors(v)) visit(w);
      for (const Vertex w : g.in_neighbors(v)) visit(w);
    }
    best = std::max(best, size);
  }
  return best == 0 ? 0 : best - 1;
}

class DfsSearch {
 public:
  DfsSearch(const Graph& g, std::uint64_t budget)
      : g_(g), budget_(budget), visited_(g.vertex_count(), 0), seen_(g.vertex_count(), 0),
        upper_(component_bound(g)) {}

  ExactResult run() {
    ExactResult result;
    best_ = single_vertex(g_).vertices;
    std::vector<Vertex> order(g_.vertex_count());
    for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
    // Low-degree vertices first: they are likely endpoints of long paths.
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g_.out_degree(a) < g_.out_degree(b); });
    for (const Vertex s : order) {
      if (stop_) break;
      path_.assign(1, s);
      visited_[s] = 1;
      extend();
      visited_[s] = 0;
    }
    result.path.vertices = best_;
    result.complete = !aborted_;
    result.expansions = expansions_;
    return result;
  }

 private:
  // Vertices reachable from v through unvisited vertices.
  std::size_t reachable(Vertex v) {
    ++stamp_;
    std::size_t count = 0;
    frontier_.assign(1, v);
    while (!frontier_.empty()) {
      const Vertex x = frontier_.back();
      frontier_.pop_back();
      for (const Vertex w : g_.neighbors(x))
        if (!visited_[w] && seen_[w] != stamp_) {
          seen_[w] = stamp_;
          ++count;
          frontier_.push_back(w);
        }
    }
    return count;
  }

  void extend() {
    if (stop_) return;
    if (++expansions_ > budget_) {
      aborted_ = stop_ = true;
      return;
    }
    if (path_.size() > best_.size()) {
      best_ = path_;
      if (best_.size() - 1 >= upper_) {
        stop_ = true;
        return;
      }
    }
    const Vertex v = path_.back();
    if (path_.size() - 1 + reachable(v) <= best_.size() - 1) return;

    std::vector<std::pair<std::size_t, Vertex>> next;
    for (const Vertex w : g_.neighbors(v)) {
      if (visited_[w]) continue;
      std::size_t onward = 0;
      for (const Vertex x : g_.neighbors(w)) onward += !visited_[x];
      next.emplace_back(onward, w);
    }
    std::sort(next.begin(), next.end());  // Warnsdorff: fewest onward moves first
    for (const auto& [onward, w] : next) {
      visited_[w] = 1;
      path_.push_back(w);
      extend();
      path_.pop_back();
      visited_[w] = 0;
      if (stop_) return;
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::vector<char> visited_;
  std::vector<std::uint64_t> seen_;
  std::uint64_t stamp_ = 0;
  std::vector<Vertex> frontier_;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_;
  std::size_t upper_;
  std::uint64_t expansions_ = 0;
  bool aborted_ = false;
  bool stop_ = false;
};

}  // namespace

ExactResult exact_longest_path(const Graph& g, std::uint64_t budget, ExactMethod method) {
  if (g.edge_count() == 0) return ExactResult{single_vertex(g), true, 0};
  const bool use_dp = method == ExactMethod::bitmask_dp ||
                      (method == ExactMethod::automatic && g.vertex_count() <= bitmask_dp_limit);
  if (use_dp) return bitmask_dp(g, budget, true);
  return DfsSearch(g, budget).run();
}

ExactResult exact_longest_path_serial(const Graph& g, std::uint64_t budget) {
  if (g.edge_count() == 0) return ExactResult{single_vertex(g), true, 0};
  return bitmask_dp(g, budget, false);
}

bool for_each_simple_path(const Graph& g, const std::function<bool(std::span<const Vertex>)>& visit,
                          std::uint64_t budget) {
  const std::size_t n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  std::uint64_t produced = 0;
  bool go = true;

  std::function<void()> dfs = [&]() {
    for (const Vertex w : g.neighbors(path.back())) {
      if (on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      if (++produced > budget || !visit(path)) go = false;
      if (go) dfs();
      on_path[w] = 0;
      path.pop_back();
      if (!go) return;
    }
  };
  for (Vertex s = 0; s < n && go; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    dfs();
    on_path[s] = 0;
  }
  return go;
}

}  // namespace longpath
