// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail 3[,..]] [--seed S]
//
// Exit status is 0 when every criterion passes, or, with --expect-fail, when
// exactly the listed criteria fail (their FAIL lines are still printed).

#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "longpath/exact.hpp"
#include "longpath/generators.hpp"
#include "longpath/hard_instances.hpp"
#include "longpath/harness.hpp"
#include "longpath/pathfinder.hpp"
#include "longpath/samplers.hpp"
#include "oracles.hpp"

using namespace longpath;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { notes.push_back("     " + what); }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::uint64_t g_seed = 1;

ExperimentConfig config(const std::string& name) {
  ExperimentConfig cfg = default_config(name);
  cfg.seed = g_seed;
  return cfg;
}

// ---------------------------------------------------------------- 1

Outcome theorem1() {
  Outcome o;
  for (const bool turnstile : {false, true}) {
    ExperimentConfig cfg = config("theorem1");
    cfg.turnstile = turnstile;
    const ExperimentReport rep = run_experiment(cfg);
    double min_ratio = 1e9;
    for (const auto& t : rep.trials) min_ratio = std::min(min_ratio, t.ratio);
    o.check(rep.passed, fmt("%s stream: %s; min len/(ceil(d)/3) = %.2f, space <= %zu",
                            turnstile ? "insertion-deletion" : "insertion-only", rep.summary.c_str(), min_ratio,
                            rep.trials.front().space));
  }
  return o;
}

// ---------------------------------------------------------------- 2

Outcome hybrid() {
  Outcome o;
  const ExperimentReport small = run_experiment(config("hybrid"));
  o.check(small.passed, "planted-path instances n = 18, s = 10^6: " + small.summary);

  // n = 200, m = 2000 < s: the whole graph is stored and solved exactly
  const PlantedPath pp = planted_path(200, 2000, derive_seed(g_seed, SeedStream::graph, 200));
  RunOptions opt;
  opt.mode = ExtractMode::heuristic;
  opt.seed = g_seed;
  const RunReport full = hybrid_run(graph_to_stream(pp.graph, StreamOrder::random, g_seed), 1'000'000, opt);
  const ExactResult exact = exact_longest_path(pp.graph);
  o.check(full.mode == RunMode::hybrid_exact && exact.complete && full.path.length() == exact.path.length() &&
              exact.path.length() == 199 && !validate_path(pp.graph, full.path),
          fmt("n = 200, m = 2000: hybrid %zu, exact oracle %zu (complete=%d, %llu expansions)", full.path.length(),
              exact.path.length(), int(exact.complete), static_cast<unsigned long long>(exact.expansions)));

  // m > s: falls back to the sampled path, which must reach d/3 >= 2s/(3n)
  std::vector<double> ratios;
  bool fallback_ok = true;
  std::size_t s = 0, m = 0;
  for (std::size_t trial = 0; trial < 5; ++trial) {
    const std::uint64_t seed = derive_seed(g_seed, SeedStream::trial, 1000 + trial);
    const Graph g = gnp(200, 0.7, seed);
    m = g.edge_count();
    s = default_sample_size(200);
    RunOptions ro;
    ro.mode = ExtractMode::core_verify;
    ro.oracle = &g;
    ro.seed = seed;
    const RunReport rep = hybrid_run(graph_to_stream(g, StreamOrder::random, seed), s, ro);
    const bool ok = rep.mode == RunMode::hybrid_sampled && !validate_path(g, rep.path) &&
                    3 * rep.path.length() * 200 >= 2 * s && degree_stats(g).average.third_at_most(rep.path.length());
    fallback_ok = fallback_ok && ok;
    ratios.push_back(199.0 / static_cast<double>(std::max<std::size_t>(rep.path.length(), 1)));
  }
  std::ostringstream rs;
  for (const double r : ratios) rs << fmt(" %.3f", r);
  o.check(fallback_ok, fmt("G(200, 0.7), m = %zu > s = %zu: sampled branch taken, len >= d/3 >= 2s/(3n); "
                           "ratios (n-1)/len:%s",
                           m, s, rs.str().c_str()));
  return o;
}

// ---------------------------------------------------------------- 3

Outcome golomb() {
  Outcome o;
  const ExperimentReport rep = run_experiment(config("golomb"));
  o.check(rep.passed, "D_SLP(2000), 500 samples: " + rep.summary);

  std::size_t instances = 0, literal_bad = 0, contracted_bad = 0, closed_bad = 0;
  std::string first_bad;
  for (std::size_t r = 1; r <= 5; ++r) {
    for_each_permutation(r, [&](const Permutation& sigma) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        Bits coins(r);
        for (std::size_t i = 0; i < r; ++i) coins[i] = (mask >> i) & 1;
        const SLPInstance inst = make_slp(sigma, coins);
        const std::size_t lc = longest_cycle(sigma);
        const std::size_t lp = exact_longest_path(inst.graph).path.length();
        const auto twins = slp_twins(inst);
        const std::size_t lp_contracted = exact_longest_path(contract_pairs(inst.graph, twins).graph).path.length();
        ++instances;
        if (lp != 2 * lc - 1) {
          if (!literal_bad++) first_bad = fmt("r = %zu, lc = %zu: lp(H) = %zu", r, lc, lp);
        }
        contracted_bad += lp_contracted != 2 * lc - 1;
        closed_bad += lp != slp_exact_lp(inst);
      }
    });
  }
  o.check(literal_bad == 0, fmt("2 lc - 1 = lp(H) over all sigma, coins, r <= 5: %zu/%zu exceptions (first: %s)",
                                literal_bad, instances, first_bad.c_str()));
  o.note(fmt("lp(H with twins contracted) = 2 lc - 1: %zu/%zu exceptions", contracted_bad, instances));
  o.note(fmt("lp(H) = 2 lc: %zu/%zu exceptions", closed_bad, instances));

  const Permutation fig = Permutation::from_one_based({2, 3, 4, 1, 6, 5});
  const SLPInstance inst = make_slp(fig, Bits(6, 0));
  const std::size_t lp = exact_longest_path(inst.graph).path.length();
  const auto twins = slp_twins(inst);
  const std::size_t lpc = exact_longest_path(contract_pairs(inst.graph, twins).graph).path.length();
  o.check(longest_cycle(fig) == 4 && lp == 7,
          fmt("sigma = (2,3,4,1,6,5): lc = %zu, lp(H) = %zu (contracted: %zu)", longest_cycle(fig), lp, lpc));
  return o;
}

// ---------------------------------------------------------------- 4

Outcome samplers() {
  Outcome o;
  {
    ExperimentConfig cfg = config("sampler-uniformity");
    cfg.trials = 1;
    cfg.m = 1000;
    cfg.k = 10;
    cfg.draws = 100'000;
    const ExperimentReport rep = run_experiment(cfg);
    o.check(rep.passed, fmt("reservoir m = 1000, k = 10, 10^5 draws: chi2 = %.1f, critical(1e-3, 999 df) = %.1f",
                            rep.trials[0].value, rep.trials[0].reference));
  }

  std::size_t outside = 0, items = 0, fails = 0, sampler_outside = 0;
  for (std::uint64_t t = 0; t < 10'000; ++t) {
    const std::uint64_t seed = derive_seed(g_seed, SeedStream::trial, t);
    Engine rng = make_engine(seed);
    const std::size_t n = 12;
    const Graph g = gnp(n, 0.1 + 0.3 * uniform_unit(rng), seed);
    const EventStream s = add_decoys(graph_to_stream(g, StreamOrder::random, seed), g, 10, seed);
    L0Sketch sk(n * n, 0.01, derive_seed(seed, SeedStream::sketch));
    for (const auto& ev : s.events) sk.update(edge_key(ev.edge, n, false), ev.kind == EventKind::insert ? 1 : -1);
    const L0Result r = sk.query();
    if (r.status == L0Status::item) {
      ++items;
      const Edge e = edge_from_key(r.key, n);
      outside += !(e.u < e.v && g.has_edge(e.u, e.v));
    } else {
      fails += r.status == L0Status::fail;
    }
    for (const Edge& e : sample_support_turnstile(s, 3, seed).sample.edges) sampler_outside += !g.has_edge(e.u, e.v);
  }
  o.check(outside == 0 && sampler_outside == 0,
          fmt("l0 soundness, 10^4 churn streams: %zu out-of-support returns (%zu items, %zu fail); "
              "turnstile sampler: %zu out-of-support",
              outside, items, fails, sampler_outside));

  const std::size_t support = 100, draws = 100'000;
  std::vector<std::size_t> hits(support, 0);
  std::size_t ok = 0;
  for (std::size_t d = 0; d < draws; ++d) {
    L0Sketch sk(1 << 16, 0.01, derive_seed(g_seed, SeedStream::sketch, d));
    for (std::uint64_t k = 0; k < support; ++k) sk.update(k * 613 + 11, 1);
    const L0Result r = sk.query();
    if (r.status != L0Status::item) continue;
    ++hits[(r.key - 11) / 613];
    ++ok;
  }
  double tv = 0.0;
  for (const std::size_t h : hits) tv += std::abs(static_cast<double>(h) / static_cast<double>(ok) - 1.0 / support);
  tv /= 2;
  o.check(tv <= 0.05, fmt("l0 uniformity, support 100, 10^5 fresh sketches, delta = 0.01: TV = %.4f "
                          "(%zu successful draws)",
                          tv, ok));
  return o;
}

// ---------------------------------------------------------------- 5, 6

Outcome from_experiment(const std::string& name, const std::string& label) {
  Outcome o;
  const ExperimentReport rep = run_experiment(config(name));
  o.check(rep.passed, label + ": " + rep.summary);
  return o;
}

Outcome undirected() {
  Outcome o = from_experiment("undir-lemmas", "rs(3, 2, 1), l in {4, 5}, 200 seeds");
  // terms of the lemma, one instance per l
  for (const std::size_t ell : {4u, 5u}) {
    const UndirReductionInstance inst = gen_undirected_reduction(trivial_rs(3, 2), {1, 0}, 1, ell, g_seed);
    std::size_t checked = 0, exceptions = 0;
    const bool complete = for_each_simple_path(inst.graph, [&](std::span<const Vertex> p) {
      const PathWitness q{{p.begin(), p.end()}};
      ++checked;
      exceptions += q.length() > undir_length_bound(inst, q);
      return true;
    });
    o.check(complete && exceptions == 0 && !validate_path(inst.graph, inst.witness) &&
                inst.witness.length() == undir_witness_base(inst) + inst.r_path.size() - 1,
            fmt("l = %zu: witness %zu = %zu + |R| (|R| = %zu); %zu paths enumerated, %zu exceptions", ell,
                inst.witness.length(), undir_witness_base(inst), inst.r_path.size() - 1, checked, exceptions));
  }
  return o;
}

// ---------------------------------------------------------------- 7

Outcome insdel() {
  Outcome o;
  for (const auto& [n, big_n] : {std::pair<std::size_t, std::size_t>{4, 4}, {8, 4}, {9, 9}}) {
    std::size_t replay_bad = 0, floor_bad = 0, bound_bad = 0, decode_bad = 0, decoded = 0, enumerated = 0;
    std::size_t enumerated_instances = 0, min_margin = SIZE_MAX;
    for (std::size_t j = 1; j <= big_n; ++j) {
      const std::uint64_t seed = derive_seed(g_seed, SeedStream::trial, 100 * n + j);
      Engine rng = make_engine(seed);
      Bits x(big_n);
      for (auto& b : x) b = fair_coin(rng);
      const InsDelReductionInstance inst = gen_insdel_reduction(x, n, j, seed);
      replay_bad += !(inst.graph == insdel_intended_graph(inst));
      floor_bad += validate_path(inst.graph, inst.witness).has_value() ||
                   inst.witness.length() < insdel_witness_floor(inst);
      min_margin = std::min(min_margin, inst.witness.length() - insdel_witness_floor(inst));

      auto check_path = [&](const PathWitness& q) {
        if (const auto bit = decode_insdel(inst, q)) {
          ++decoded;
          decode_bad += *bit != x[j - 1];
        }
      };
      check_path(inst.witness);
      if (inst.graph.vertex_count() <= 14) {
        ++enumerated_instances;
        const bool complete = for_each_simple_path(inst.graph, [&](std::span<const Vertex> p) {
          const PathWitness q{{p.begin(), p.end()}};
          ++enumerated;
          bound_bad += q.length() > insdel_length_bound(inst, q);
          check_path(q);
          return true;
        });
        bound_bad += !complete;
      }
    }
    o.check(replay_bad == 0 && floor_bad == 0 && bound_bad == 0 && decode_bad == 0,
            fmt("(n, N) = (%zu, %zu), J = 1..%zu: replay mismatches %zu, witness below 2(n - sqrt N) - 1: %zu "
                "(min margin %zu); bound exceptions %zu over %zu paths in %zu enumerated instances; "
                "decoder %zu wrong of %zu",
                n, big_n, big_n, replay_bad, floor_bad, min_margin, bound_bad, enumerated, enumerated_instances,
                decode_bad, decoded));
  }
  return o;
}

// ---------------------------------------------------------------- 8

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t exceptions = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    const std::uint64_t seed = derive_seed(g_seed, SeedStream::trial, t);
    Engine rng = make_engine(seed);
    const std::size_t n = 1 + uniform_below(rng, 9);
    Graph g = gnp(n, uniform_unit(rng), seed);
    if (t % 4 == 3) {
      std::vector<Edge> arcs;
      for (const Edge& e : g.edges()) arcs.push_back(fair_coin(rng) ? e : Edge{e.v, e.u});
      g = Graph::build(n, arcs, true);
    }
    const ExactResult r = exact_longest_path(g);
    const std::size_t truth = oracle::longest_path(g);
    exceptions += !r.complete || r.path.length() != truth || validate_path(g, r.path).has_value();
    exceptions += exact_longest_path(g, default_exact_budget, ExactMethod::dfs).path.length() != truth;
  }
  o.check(exceptions == 0, fmt("1000 random graphs, n <= 9, DP and DFS vs brute force: %zu exceptions", exceptions));
  const std::size_t pet = exact_longest_path(petersen_graph()).path.length();
  const std::size_t c5 = exact_longest_path(cycle_graph(5)).path.length();
  o.check(pet == 9 && c5 == 4, fmt("Petersen %zu, C_5 %zu", pet, c5));
  return o;
}

// ---------------------------------------------------------------- 9

Outcome peeling() {
  Outcome o;
  std::size_t core_bad = 0, greedy_bad = 0, graphs = 0;
  for (std::uint64_t t = 0; graphs < 1000; ++t) {
    const std::uint64_t seed = derive_seed(g_seed, SeedStream::trial, t);
    Engine rng = make_engine(seed);
    const std::size_t n = 2 + uniform_below(rng, 60);
    const std::size_t extra = std::min(uniform_below(rng, 2 * n), (n - 1) * (n - 2) / 2);
    const Graph g = t % 3 == 2 ? planted_path(n, n - 1 + extra, seed).graph
                               : gnp(n, 0.02 + 0.5 * uniform_unit(rng), seed);
    if (g.edge_count() == 0) continue;
    ++graphs;
    const CoreResult c = peel_core(g);
    bool ok = !c.core.empty();
    const InducedSubgraph sub = induced_subgraph(g, c.core);
    for (Vertex v = 0; v < sub.graph.vertex_count(); ++v) ok = ok && !c.threshold.at_most_half(sub.graph.degree(v));
    core_bad += !ok;
    const std::size_t delta = degree_stats(g).min_degree;
    for (Vertex s = 0; s < n; ++s) {
      const PathWitness p = greedy_extend(g, s);
      greedy_bad += validate_path(g, p).has_value() || p.length() < delta;
    }
  }
  o.check(core_bad == 0, fmt("%zu random graphs: core nonempty with min degree > d/2, %zu exceptions", graphs,
                             core_bad));
  o.check(greedy_bad == 0, fmt("greedy from every start reaches length >= min degree: %zu exceptions", greedy_bad));
  return o;
}

std::set<int> parse_list(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  if (const char* s = std::getenv("LONGPATH_SEED")) g_seed = std::strtoull(s, nullptr, 10);
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expected_failures = parse_list(argv[++i]);
    } else if (arg == "--seed" && i + 1 < argc) {
      g_seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::fprintf(stderr, "usage: acceptance [--expect-fail i,j] [--seed S]\n");
      return 2;
    }
  }

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"d/3 path on G(1000, 300/999)", theorem1},
      {"hybrid algorithm", hybrid},
      {"longest cycles and D_SLP", golomb},
      {"sampler correctness", samplers},
      {"D_LP trimmed paths", [] { return from_experiment("dlp-struct", "50 instances, <= 12 vertices"); }},
      {"undirected reduction lemmas", undirected},
      {"insertion-deletion reduction lemmas", insdel},
      {"exact oracle equivalence", oracle_equivalence},
      {"peeling and greedy guarantees", peeling},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const int id = static_cast<int>(i + 1);
    if (!out.pass) failed.insert(id);
    std::printf("criterion %d %s: %s (%.1fs)%s\n", id, out.pass ? "PASS" : "FAIL", criteria[i].first, secs,
                !out.pass && expected_failures.count(id) ? " [known deviation, see README]" : "");
    for (const auto& n : out.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }

  std::printf("seed %llu: %zu/%zu criteria pass\n", static_cast<unsigned long long>(g_seed),
              criteria.size() - failed.size(), criteria.size());
  if (failed.empty()) return 0;
  if (!expected_failures.empty() && failed == expected_failures) {
    std::printf("failures match the documented deviations exactly\n");
    return 0;
  }
  return 1;
}
