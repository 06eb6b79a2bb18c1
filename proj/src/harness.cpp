#include "longpath/harness.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "longpath/exact.hpp"
#include "longpath/generators.hpp"
#include "longpath/hard_instances.hpp"
#include "longpath/pathfinder.hpp"
#include "longpath/rng.hpp"
#include "longpath/samplers.hpp"
#include "longpath/stream.hpp"

namespace longpath {

namespace {

constexpr double golomb_target = 2 * 0.62432;

std::uint64_t trial_seed(const ExperimentConfig& cfg, std::size_t trial) {
  return derive_seed(cfg.seed, SeedStream::trial, trial);
}

void require_valid(const Graph& g, const PathWitness& p) {
  if (const auto bad = validate_path(g, p))
    throw std::logic_error(std::string("path failed validation: ") + to_string(bad->kind));
}

Bits random_bits(std::size_t count, std::uint64_t seed) {
  Engine rng = make_engine(seed);
  Bits x(count);
  for (auto& b : x) b = fair_coin(rng);
  return x;
}

// ---------------------------------------------------------------- trials

TrialRecord theorem1_trial(const ExperimentConfig& cfg, std::size_t trial) {
  const std::uint64_t seed = trial_seed(cfg, trial);
  const Graph g = gnp(cfg.n, cfg.d / static_cast<double>(cfg.n - 1), seed);
  EventStream s = graph_to_stream(g, StreamOrder::random, seed);
  if (cfg.turnstile)
    s = add_decoys(s, g, static_cast<std::size_t>(cfg.decoy_fraction * static_cast<double>(g.edge_count())), seed);

  RunOptions opt;
  opt.mode = ExtractMode::core_verify;
  opt.sample_constant = cfg.sample_constant;
  opt.delta = cfg.delta;
  opt.seed = seed;
  opt.oracle = &g;
  opt.restarts = cfg.restarts;
  const RunReport rep = run_semi_streaming(s, opt);
  require_valid(g, rep.path);

  const AverageDegree avg = degree_stats(g).average;
  const std::uint64_t d_ceil = avg.vertices ? (avg.twice_edges + avg.vertices - 1) / avg.vertices : 0;
  TrialRecord t{trial, seed, static_cast<double>(rep.path.length()), static_cast<double>(d_ceil) / 3.0, 0.0,
                3 * rep.path.length() >= d_ceil, rep.space_used()};
  t.ratio = t.reference > 0 ? t.value / t.reference : 0.0;
  return t;
}

TrialRecord golomb_trial(const ExperimentConfig& cfg, std::size_t trial) {
  const std::uint64_t seed = trial_seed(cfg, trial);
  const SLPInstance inst = gen_slp(cfg.r, seed);
  require_valid(inst.graph, inst.witness);
  const std::size_t lp = slp_exact_lp(inst);
  if (inst.witness.length() != lp) throw std::logic_error("D_SLP witness length differs from 2 lc");
  const double ratio = static_cast<double>(lp) / static_cast<double>(cfg.r);
  return {trial, seed, static_cast<double>(lp), static_cast<double>(cfg.r), ratio, true, 3 * cfg.r};
}

// Chi-square of reservoir inclusion counts over `draws` independent samplers.
TrialRecord uniformity_trial(const ExperimentConfig& cfg, std::size_t trial) {
  const std::uint64_t seed = trial_seed(cfg, trial);
  std::size_t nv = 2;
  while (nv * (nv - 1) / 2 < cfg.m) ++nv;
  EventStream s{nv, false, {}};
  for (Vertex u = 0; u < nv && s.events.size() < cfg.m; ++u)
    for (Vertex v = u + 1; v < nv && s.events.size() < cfg.m; ++v) s.events.push_back({EventKind::insert, {u, v}});

  std::vector<std::uint64_t> counts(nv * nv, 0);
  for (std::size_t d = 0; d < cfg.draws; ++d) {
    const SampleF f = reservoir_sample(s, cfg.k, derive_seed(seed, SeedStream::sampler, d));
    for (const Edge& e : f.edges) ++counts[edge_key(e, nv, false)];
  }
  const double expected = static_cast<double>(cfg.draws) * static_cast<double>(std::min(cfg.k, cfg.m)) /
                          static_cast<double>(cfg.m);
  double chi = 0.0;
  for (const StreamEvent& ev : s.events) {
    const double c = static_cast<double>(counts[edge_key(ev.edge, nv, false)]);
    chi += (c - expected) * (c - expected) / expected;
  }
  const boost::math::chi_squared dist(static_cast<double>(cfg.m - 1));
  const double critical = boost::math::quantile(boost::math::complement(dist, 1e-3));
  return {trial, seed, chi, critical, chi / critical, chi <= critical, cfg.k};
}

TrialRecord dlp_trial(const ExperimentConfig& cfg, std::size_t trial) {
  const std::uint64_t seed = trial_seed(cfg, trial);
  const std::size_t sides = std::min<std::size_t>(cfg.n, 4);
  const std::size_t edges = 2 + trial % (sides * 2 - 1);
  const RSGraph rs = random_small_rs(sides, edges, 1, seed);
  const DLPInstance inst = gen_dlp(rs, seed);
  require_valid(inst.graph, inst.witness);
  std::size_t checked = 0, violations = 0;
  const bool complete = for_each_simple_path(
      inst.graph,
      [&](std::span<const Vertex> p) {
        if (p.size() >= 3) {
          ++checked;
          violations += verify_trimmed_path(inst, PathWitness{{p.begin(), p.end()}}).has_value();
        }
        return true;
      },
      cfg.path_budget);
  return {trial, seed, static_cast<double>(violations), static_cast<double>(checked), 0.0,
          complete && violations == 0, inst.graph.edge_count()};
}

TrialRecord undir_trial(const ExperimentConfig& cfg, std::size_t trial) {
  const std::uint64_t seed = trial_seed(cfg, trial);
  const RSGraph rs = trivial_rs(cfg.n, cfg.r);
  const std::size_t ell = cfg.ell + trial % 2;
  const std::size_t big_n = rs.r() * rs.t();
  const Bits x = random_bits(big_n, derive_seed(seed, SeedStream::bits, 7));
  const std::size_t j = 1 + trial % big_n;
  const UndirReductionInstance inst = gen_undirected_reduction(rs, x, j, ell, seed);

  bool ok = !validate_path(inst.graph, inst.witness) &&
            inst.witness.length() == undir_witness_base(inst) + (inst.r_path.size() - 1);
  std::size_t violations = 0;
  const bool complete = for_each_simple_path(
      inst.graph,
      [&](std::span<const Vertex> p) {
        const PathWitness q{{p.begin(), p.end()}};
        if (q.length() > undir_length_bound(inst, q)) ++violations;
        if (const auto bit = decode_undirected(inst, q); bit && *bit != x[j - 1]) ++violations;
        return true;
      },
      cfg.path_budget);
  ok = ok && complete && violations == 0;
  const double r_len = static_cast<double>(inst.r_path.size() - 1);
  const double half_r = static_cast<double>(rs.r()) / 2.0;
  return {trial, seed, static_cast<double>(inst.witness.length()),
          static_cast<double>(undir_witness_base(inst)) + half_r, r_len / half_r, ok, inst.graph.edge_count()};
}

TrialRecord insdel_trial(const ExperimentConfig& cfg, std::size_t trial) {
  const std::uint64_t seed = trial_seed(cfg, trial);
  const Bits x = random_bits(cfg.big_n, derive_seed(seed, SeedStream::bits, 7));
  const std::size_t j = 1 + trial % cfg.big_n;
  const InsDelReductionInstance inst = gen_insdel_reduction(x, cfg.n, j, seed);

  bool ok = inst.graph == insdel_intended_graph(inst) && !validate_path(inst.graph, inst.witness) &&
            inst.witness.length() >= insdel_witness_floor(inst);
  {
    const auto vs = insdel_planted_vertices(inst);
    const InducedSubgraph sub = induced_subgraph(inst.graph, vs);
    ok = ok && sub.graph.edge_count() == inst.m.size() + inst.n1.size() + inst.n2.size();
  }
  std::size_t violations = 0;
  const bool complete = for_each_simple_path(
      inst.graph,
      [&](std::span<const Vertex> p) {
        const PathWitness q{{p.begin(), p.end()}};
        if (q.length() > insdel_length_bound(inst, q)) ++violations;
        if (const auto bit = decode_insdel(inst, q); bit && *bit != x[j - 1]) ++violations;
        return true;
      },
      cfg.path_budget);
  ok = ok && complete && violations == 0;
  return {trial, seed, static_cast<double>(inst.witness.length()), static_cast<double>(insdel_witness_floor(inst)),
          0.0, ok, inst.stream.events.size()};
}

TrialRecord hybrid_trial(const ExperimentConfig& cfg, std::size_t trial) {
  const std::uint64_t seed = trial_seed(cfg, trial);
  const std::size_t possible = cfg.n * (cfg.n - 1) / 2;
  const std::size_t m = std::max(cfg.n - 1, std::min(possible, static_cast<std::size_t>(cfg.d * cfg.n / 2)));
  const PlantedPath pp = planted_path(cfg.n, m, seed);
  const EventStream s = graph_to_stream(pp.graph, StreamOrder::random, seed);
  RunOptions opt;
  opt.mode = ExtractMode::heuristic;
  opt.seed = seed;
  opt.sample_constant = cfg.sample_constant;
  opt.restarts = cfg.restarts;
  const RunReport rep = hybrid_run(s, cfg.space, opt);
  require_valid(pp.graph, rep.path);
  const ExactResult exact = exact_longest_path(pp.graph);
  const double lp = static_cast<double>(exact.path.length());
  const double len = static_cast<double>(rep.path.length());
  return {trial, seed, len, lp, len > 0 ? lp / len : 0.0,
          rep.mode == RunMode::hybrid_exact && exact.complete && len == lp, rep.space_used()};
}

TrialRecord roundtrip_trial(const ExperimentConfig& cfg, std::size_t trial) {
  const std::uint64_t seed = trial_seed(cfg, trial);
  const std::size_t r = std::max<std::size_t>(1, std::min(cfg.r, cfg.n - 1));
  const RSGraph rs = trivial_rs(cfg.n, r);
  const Bits x = random_bits(r, derive_seed(seed, SeedStream::bits, 7));
  Engine rng = make_engine(derive_seed(seed, SeedStream::index));
  const std::size_t j = 1 + uniform_below(rng, r);
  const UndirReductionInstance inst = gen_undirected_reduction(rs, x, j, cfg.ell, seed);
  RunOptions opt;
  opt.mode = ExtractMode::heuristic;
  opt.seed = seed;
  opt.sample_constant = cfg.sample_constant;
  opt.restarts = cfg.restarts;
  const RunReport rep = run_semi_streaming(inst.stream, opt);
  require_valid(inst.graph, rep.path);
  const auto bit = decode_undirected(inst, rep.path);
  const int out = bit ? *bit : static_cast<int>(fair_coin(rng));
  return {trial, seed, static_cast<double>(out == x[j - 1]), 0.5, bit ? 1.0 : 0.0, out == x[j - 1],
          rep.space_used()};
}

using TrialFn = TrialRecord (*)(const ExperimentConfig&, std::size_t);

TrialFn trial_function(const std::string& name) {
  if (name == "theorem1") return theorem1_trial;
  if (name == "golomb") return golomb_trial;
  if (name == "sampler-uniformity") return uniformity_trial;
  if (name == "dlp-struct") return dlp_trial;
  if (name == "undir-lemmas") return undir_trial;
  if (name == "insdel-lemmas") return insdel_trial;
  if (name == "hybrid") return hybrid_trial;
  if (name == "index-roundtrip") return roundtrip_trial;
  throw std::invalid_argument("unknown experiment '" + name + "'");
}

void judge(ExperimentReport& rep) {
  const std::size_t ok = static_cast<std::size_t>(
      std::count_if(rep.trials.begin(), rep.trials.end(), [](const TrialRecord& t) { return t.success; }));
  const std::size_t total = rep.trials.size();
  char buf[160];
  if (rep.name == "theorem1") {
    const std::size_t need = (19 * total + 19) / 20;
    rep.passed = ok >= need;
    std::snprintf(buf, sizeof buf, "%zu/%zu trials with 3*len >= ceil(d) (need %zu)", ok, total, need);
  } else if (rep.name == "golomb") {
    rep.passed = rep.mean_ratio >= 1.22 && rep.mean_ratio <= 1.28;
    std::snprintf(buf, sizeof buf, "mean lp/r = %.4f, target %.4f, window [1.22, 1.28]", rep.mean_ratio,
                  golomb_target);
  } else if (rep.name == "undir-lemmas") {
    const std::size_t long_r = static_cast<std::size_t>(
        std::count_if(rep.trials.begin(), rep.trials.end(), [](const TrialRecord& t) { return t.ratio >= 1.0; }));
    rep.passed = ok == total && 10 * long_r >= 3 * total;
    std::snprintf(buf, sizeof buf, "%zu/%zu instances clean, |R| >= r/2 in %zu/%zu", ok, total, long_r, total);
  } else if (rep.name == "index-roundtrip") {
    rep.passed = true;
    std::snprintf(buf, sizeof buf, "bit recovered in %zu/%zu trials (illustrative)", ok, total);
  } else {
    rep.passed = ok == total;
    std::snprintf(buf, sizeof buf, "%zu/%zu trials passed", ok, total);
  }
  rep.summary = buf;
}

ExperimentReport run(const ExperimentConfig& cfg, bool parallel) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  const TrialFn fn = trial_function(cfg.name);
  ExperimentReport rep;
  rep.name = cfg.name;
  rep.seed = cfg.seed;
  rep.acceptance = is_acceptance_experiment(cfg.name);
  rep.trials.resize(cfg.trials);
  const auto count = static_cast<std::int64_t>(cfg.trials);
  if (parallel) {
    std::string error;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        rep.trials[static_cast<std::size_t>(i)] = fn(cfg, static_cast<std::size_t>(i));
      } catch (const std::exception& e) {
#pragma omp critical
        if (error.empty()) error = e.what();
      }
    }
    if (!error.empty()) throw std::runtime_error(cfg.name + ": " + error);
  } else {
    for (std::int64_t i = 0; i < count; ++i)
      rep.trials[static_cast<std::size_t>(i)] = fn(cfg, static_cast<std::size_t>(i));
  }
  aggregate(rep);
  judge(rep);
  return rep;
}

std::string number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"theorem1",     "golomb",        "sampler-uniformity", "dlp-struct",
                                              "undir-lemmas", "insdel-lemmas", "hybrid",             "index-roundtrip"};
  return names;
}

bool is_acceptance_experiment(const std::string& name) { return name != "index-roundtrip"; }

ExperimentConfig default_config(const std::string& name) {
  trial_function(name);  // validates the name
  ExperimentConfig cfg;
  cfg.name = name;
  if (name == "golomb") {
    cfg.trials = 500;
  } else if (name == "sampler-uniformity") {
    cfg.trials = 10;
  } else if (name == "dlp-struct") {
    cfg.trials = 50;
    cfg.n = 4;
  } else if (name == "undir-lemmas") {
    cfg.trials = 200;
    cfg.n = 3;
    cfg.r = 2;
  } else if (name == "insdel-lemmas") {
    cfg.trials = 4;
    cfg.n = 8;
    cfg.big_n = 4;
  } else if (name == "hybrid") {
    cfg.n = 18;
    cfg.d = 8;
  } else if (name == "index-roundtrip") {
    cfg.trials = 100;
    cfg.n = 40;
    cfg.r = 20;
  }
  return cfg;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) { return run(cfg, true); }
ExperimentReport run_experiment_serial(const ExperimentConfig& cfg) { return run(cfg, false); }

void aggregate(ExperimentReport& rep) {
  const double total = static_cast<double>(rep.trials.size());
  rep.mean_value = rep.mean_ratio = rep.success_rate = rep.ci_low = rep.ci_high = 0.0;
  if (rep.trials.empty()) return;
  double ok = 0.0;
  for (const TrialRecord& t : rep.trials) {
    rep.mean_value += t.value;
    rep.mean_ratio += t.ratio;
    ok += t.success;
  }
  rep.mean_value /= total;
  rep.mean_ratio /= total;
  rep.success_rate = ok / total;
  const double z = 1.959963984540054;
  const double p = rep.success_rate;
  const double denom = 1 + z * z / total;
  const double centre = (p + z * z / (2 * total)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / total + z * z / (4 * total * total)) / denom;
  rep.ci_low = std::max(0.0, centre - half);
  rep.ci_high = std::min(1.0, centre + half);
}

std::optional<ReportFormat> parse_report_format(const std::string& text) {
  if (text == "csv") return ReportFormat::csv;
  if (text == "table") return ReportFormat::table;
  return std::nullopt;
}

void emit_report(std::ostream& out, const ExperimentReport& rep, ReportFormat format) {
  static const char* const columns[] = {"trial", "seed",    "value", "reference", "ratio",
                                        "success", "space", "ci_low", "ci_high"};
  std::vector<std::vector<std::string>> rows;
  for (const TrialRecord& t : rep.trials)
    rows.push_back({std::to_string(t.trial), std::to_string(t.seed), number(t.value), number(t.reference),
                    number(t.ratio), t.success ? "1" : "0", std::to_string(t.space), "", ""});
  if (!rep.trials.empty()) {
    double reference = 0.0;
    std::size_t space = 0;
    for (const TrialRecord& t : rep.trials) {
      reference += t.reference;
      space = std::max(space, t.space);
    }
    reference /= static_cast<double>(rep.trials.size());
    rows.push_back({"aggregate", std::to_string(rep.seed), number(rep.mean_value), number(reference),
                    number(rep.mean_ratio), number(rep.success_rate), std::to_string(space), number(rep.ci_low),
                    number(rep.ci_high)});
  }

  if (format == ReportFormat::csv) {
    for (std::size_t c = 0; c < std::size(columns); ++c) out << (c ? "," : "") << columns[c];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(std::size(columns));
  for (std::size_t c = 0; c < width.size(); ++c) {
    width[c] = std::string(columns[c]).size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](auto&& cell) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string text = cell(c);
      out << (c ? "  " : "") << std::string(width[c] - text.size(), ' ') << text;
    }
    out << '\n';
  };
  line([&](std::size_t c) { return std::string(columns[c]); });
  for (const auto& row : rows) line([&](std::size_t c) { return row[c]; });
}

}  // namespace longpath
