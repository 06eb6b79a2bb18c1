// longpath: command-line front end for the streaming longest-path library.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "longpath/exact.hpp"
#include "longpath/generators.hpp"
#include "longpath/hard_instances.hpp"
#include "longpath/harness.hpp"
#include "longpath/io.hpp"
#include "longpath/pathfinder.hpp"
#include "longpath/rs_graph.hpp"
#include "longpath/stream.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace longpath;

namespace {

constexpr const char* seed_env = "LONGPATH_SEED";

std::uint64_t default_seed() {
  if (const char* s = std::getenv(seed_env)) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(seed_env) + " is not an unsigned integer");
    }
  }
  return 1;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json one_based(const Permutation& p) {
  json out = json::array();
  for (const auto v : p.image) out.push_back(v + 1);
  return out;
}

std::string bit_string(const Bits& bits) {
  std::string s;
  for (const auto b : bits) s += b ? '1' : '0';
  return s;
}

Bits parse_bits(const std::string& text) {
  Bits out;
  for (const char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string may only contain 0 and 1");
    out.push_back(c == '1');
  }
  return out;
}

void write_json(const fs::path& file, const json& j) {
  std::ofstream f(file);
  if (!f) throw std::runtime_error("cannot open " + file.string());
  f << j.dump(2) << '\n';
}

json read_json(const fs::path& file) {
  std::ifstream f(file);
  if (!f) throw std::runtime_error("cannot open " + file.string());
  return json::parse(f);
}

// ---------------------------------------------------------------- instance generation

struct GenArgs {
  std::string kind;
  std::uint64_t seed = 0;
  fs::path out;
  std::size_t r = 6;
  std::size_t n = 4;
  std::size_t big_n = 4;
  std::size_t j = 0;  // 0: drawn from the seed
  std::size_t ell = 4;
  std::string x;
  std::string rs_file;
  double d = 10.0;
};

Bits bits_or_random(const std::string& text, std::size_t count, std::uint64_t seed) {
  if (!text.empty()) {
    Bits b = parse_bits(text);
    if (b.size() != count) throw std::invalid_argument("--x must have " + std::to_string(count) + " bits");
    return b;
  }
  Engine rng = make_engine(derive_seed(seed, SeedStream::bits, 99));
  Bits b(count);
  for (auto& v : b) v = fair_coin(rng);
  return b;
}

std::size_t index_or_random(std::size_t j, std::size_t count, std::uint64_t seed) {
  if (j) return j;
  Engine rng = make_engine(derive_seed(seed, SeedStream::index, 99));
  return 1 + uniform_below(rng, count);
}

RSGraph rs_for(const GenArgs& a) {
  return a.rs_file.empty() ? trivial_rs(a.n, std::min(a.r, a.n > 1 ? a.n - 1 : 1)) : load_rs(a.rs_file);
}

// Materializes an instance from its recorded parameters. Shared by gen and verify.
struct Built {
  json meta;
  Graph graph;
  EventStream stream;
  PathWitness witness;
  std::optional<RSGraph> rs;
  std::optional<SLPInstance> slp;
  std::optional<DLPInstance> dlp;
  std::optional<UndirReductionInstance> undir;
  std::optional<InsDelReductionInstance> insdel;
};

Built build_instance(const std::string& kind, const json& params, const std::optional<RSGraph>& rs) {
  Built b;
  const std::uint64_t seed = params.at("seed");
  b.meta = {{"kind", kind}, {"params", params}};
  if (kind == "slp") {
    const SLPInstance inst = gen_slp(params.at("r"), seed);
    b.meta["coins"] = bit_string(inst.coins);
    b.meta["sigma"] = one_based(inst.sigma);
    b.meta["M"] = edges_json(inst.m);
    b.meta["N1"] = edges_json(inst.n1);
    b.meta["N2"] = edges_json(inst.n2);
    b.meta["longest_cycle"] = longest_cycle(inst.sigma);
    b.meta["lp"] = slp_exact_lp(inst);
    b.meta["contracted_lp"] = slp_contracted_lp(inst);
    b.meta["layout"] = "a_i = i-1, b1_i = r+i-1, b2_i = 2r+i-1";
    b.graph = inst.graph;
    b.stream = graph_to_stream(inst.graph);
    b.witness = inst.witness;
    b.slp = inst;
  } else if (kind == "dlp") {
    const DLPInstance inst = gen_dlp(*rs, seed);
    json coins = json::array();
    for (const auto& c : inst.coins) coins.push_back(bit_string(c));
    json ms = json::array();
    for (const auto& m : inst.m) ms.push_back(edges_json(m));
    b.meta["coins"] = coins;
    b.meta["J"] = inst.j;
    b.meta["M"] = ms;
    b.meta["N1"] = edges_json(inst.n1);
    b.meta["N2"] = edges_json(inst.n2);
    b.meta["layout"] = "A = [0,n), B1 = [n,2n), B2 = [2n,3n)";
    b.graph = inst.graph;
    b.stream = graph_to_stream(inst.graph);
    b.witness = inst.witness;
    b.rs = rs;
    b.dlp = inst;
  } else if (kind == "undir-reduction") {
    const Bits x = parse_bits(params.at("x"));
    const UndirReductionInstance inst = gen_undirected_reduction(*rs, x, params.at("J"), params.at("ell"), seed);
    b.meta["J"] = inst.j;
    b.meta["i_star"] = inst.i_star;
    b.meta["j_star"] = inst.j_star;
    b.meta["X"] = bit_string(inst.x);
    b.meta["Y"] = bit_string(inst.y);
    b.meta["pi"] = one_based(inst.pi);
    b.meta["M_istar"] = edges_json(inst.m[inst.i_star - 1]);
    b.meta["N1"] = edges_json(inst.n1);
    b.meta["N2"] = edges_json(inst.n2);
    b.meta["gateway"] = inst.gateway;
    b.meta["s_P"] = inst.gateway.front();
    b.meta["t_P"] = inst.gateway.back();
    b.meta["F"] = edges_json(inst.fan);
    b.meta["special_edge"] = {inst.special.u, inst.special.v};
    b.meta["R"] = inst.r_path;
    b.meta["decode"] = "Z xor Y[J], Z = special edge on B2";
    b.meta["alice_events"] = inst.alice_events;
    b.meta["layout"] = "A = [0,n), B1 = [n,2n), B2 = [2n,3n), subdivisions from 3n";
    b.graph = inst.graph;
    b.stream = inst.stream;
    b.witness = inst.witness;
    b.rs = rs;
    b.undir = inst;
  } else if (kind == "insdel-reduction") {
    const Bits x = parse_bits(params.at("x"));
    const InsDelReductionInstance inst = gen_insdel_reduction(x, params.at("n"), params.at("J"), seed);
    b.meta["J"] = inst.j;
    b.meta["i_star"] = inst.i_star;
    b.meta["j_star"] = inst.j_star;
    b.meta["X"] = bit_string(inst.x);
    b.meta["pi1"] = one_based(inst.pi1);
    b.meta["pi2"] = one_based(inst.pi2);
    b.meta["Y_prime"] = bit_string(inst.y_prime);
    b.meta["Z"] = bit_string(inst.z);
    b.meta["Y"] = bit_string(inst.y);
    json idx = json::array();
    for (const auto& [i, jj] : inst.deleted_index) idx.push_back({i, jj});
    b.meta["I"] = idx;
    b.meta["M"] = edges_json(inst.m);
    b.meta["N1"] = edges_json(inst.n1);
    b.meta["N2"] = edges_json(inst.n2);
    b.meta["special_b1"] = {inst.special_b1.u, inst.special_b1.v};
    b.meta["special_b2"] = {inst.special_b2.u, inst.special_b2.v};
    b.meta["alice_events"] = inst.alice_events;
    b.meta["layout"] = "a^x = x-1, b1^x = n+x-1, b2^x = 2n+x-1; matrices row-major n x n";
    b.graph = inst.graph;
    b.stream = inst.stream;
    b.witness = inst.witness;
    b.insdel = inst;
  } else {
    throw std::invalid_argument("unknown instance kind '" + kind + "'");
  }
  b.meta["witness"] = b.witness.vertices;
  b.meta["witness_length"] = b.witness.length();
  return b;
}

int cmd_gen(const GenArgs& a) {
  fs::create_directories(a.out);
  if (a.kind == "gnp" || a.kind == "planted") {
    Graph g;
    if (a.kind == "gnp") {
      g = gnp(a.n, a.n > 1 ? a.d / static_cast<double>(a.n - 1) : 0.0, a.seed);
    } else {
      // the path itself needs n - 1 edges; a simple graph allows at most n(n-1)/2
      const std::size_t want = static_cast<std::size_t>(a.d * static_cast<double>(a.n) / 2);
      const std::size_t m = std::clamp(want, a.n > 0 ? a.n - 1 : 0, a.n * (a.n > 0 ? a.n - 1 : 0) / 2);
      const PlantedPath pp = planted_path(a.n, m, a.seed);
      g = pp.graph;
      save_path(a.out / "witness.txt", pp.path);
    }
    save_graph(a.out / "graph.txt", g);
    save_stream(a.out / "stream.txt", graph_to_stream(g));
    std::cout << "wrote " << (a.out / "graph.txt").string() << " n=" << g.vertex_count() << " m=" << g.edge_count()
              << '\n';
    return 0;
  }

  json params{{"seed", a.seed}};
  std::optional<RSGraph> rs;
  if (a.kind == "slp") {
    params["r"] = a.r;
  } else if (a.kind == "dlp") {
    rs = rs_for(a);
  } else if (a.kind == "undir-reduction") {
    rs = rs_for(a);
    const std::size_t bits = rs->r() * rs->t();
    params["x"] = bit_string(bits_or_random(a.x, bits, a.seed));
    params["J"] = index_or_random(a.j, bits, a.seed);
    params["ell"] = a.ell;
  } else if (a.kind == "insdel-reduction") {
    params["n"] = a.n;
    params["x"] = bit_string(bits_or_random(a.x, a.big_n, a.seed));
    params["J"] = index_or_random(a.j, a.big_n, a.seed);
  }
  const Built b = build_instance(a.kind, params, rs);
  if (rs) save_rs(a.out / "rs.txt", *rs);
  save_stream(a.out / "stream.txt", b.stream);
  save_graph(a.out / "graph.txt", b.graph);
  save_path(a.out / "witness.txt", b.witness);
  write_json(a.out / "instance.json", b.meta);
  std::cout << "wrote " << a.kind << " instance to " << a.out.string() << " (" << b.graph.vertex_count()
            << " vertices, " << b.stream.events.size() << " events, witness length " << b.witness.length() << ")\n";
  return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& what, const fs::path& dir, const std::string& path_file) {
  if (what == "rs") {
    const fs::path file = fs::is_directory(dir) ? dir / "rs.txt" : dir;
    const RSGraph rs = load_rs(file);
    if (const auto bad = verify_rs_decomposition(rs.base(), rs.n, rs.matchings)) {
      std::cout << "rs=invalid matching=" << bad->matching + 1 << " reason=" << to_string(bad->kind) << " ("
                << bad->detail << ")\n";
      return 1;
    }
    std::cout << "rs=valid n=" << rs.n << " r=" << rs.r() << " t=" << rs.t() << '\n';
    return 0;
  }

  const Graph g = load_graph(dir / "graph.txt");
  const PathWitness q = load_path(path_file.empty() ? dir / "witness.txt" : fs::path(path_file));
  if (const auto bad = validate_path(g, q)) {
    std::cout << "path=invalid reason=" << to_string(bad->kind) << " position=" << bad->position << '\n';
    return 1;
  }
  std::cout << "path=valid length=" << q.length() << '\n';
  if (what == "path") return 0;
  if (what != "lemma") throw std::invalid_argument("verify expects rs, path or lemma");

  const json meta = read_json(dir / "instance.json");
  const std::string kind = meta.at("kind");
  std::optional<RSGraph> rs;
  if (fs::exists(dir / "rs.txt")) rs = load_rs(dir / "rs.txt");
  const Built b = build_instance(kind, meta.at("params"), rs);
  if (!(b.stream == load_stream(dir / "stream.txt"))) {
    std::cout << "instance=inconsistent (stream differs from the regenerated one)\n";
    return 1;
  }
  bool holds = true;
  if (b.slp) {
    const std::size_t lp = slp_exact_lp(*b.slp);
    holds = q.length() <= lp;
    std::cout << "lemma=golomb lp=" << lp << " contracted_lp=" << slp_contracted_lp(*b.slp) << " bound_holds=" << holds
              << '\n';
  } else if (b.dlp) {
    if (q.length() < 2) {
      std::cout << "lemma=struct holds=1 (path shorter than 2, nothing to trim)\n";
    } else {
      const auto bad = verify_trimmed_path(*b.dlp, q);
      holds = !bad;
      std::cout << "lemma=struct holds=" << holds;
      if (bad) std::cout << " violating_edge=" << bad->u << "," << bad->v;
      std::cout << '\n';
    }
  } else if (b.undir) {
    const std::size_t bound = undir_length_bound(*b.undir, q);
    holds = q.length() <= bound;
    const auto bit = decode_undirected(*b.undir, q);
    std::cout << "lemma=undirected-bound length=" << q.length() << " bound=" << bound << " holds=" << holds
              << " decoded=" << (bit ? std::to_string(*bit) : "fail") << " x_j=" << int(b.undir->x[b.undir->j - 1])
              << '\n';
    if (bit) holds = holds && *bit == b.undir->x[b.undir->j - 1];
  } else if (b.insdel) {
    const std::size_t bound = insdel_length_bound(*b.insdel, q);
    holds = q.length() <= bound;
    const auto bit = decode_insdel(*b.insdel, q);
    std::cout << "lemma=insdel-bound length=" << q.length() << " bound=" << bound << " holds=" << holds
              << " decoded=" << (bit ? std::to_string(*bit) : "fail") << " x_j=" << int(b.insdel->x[b.insdel->j - 1])
              << '\n';
    if (bit) holds = holds && *bit == b.insdel->x[b.insdel->j - 1];
  }
  return holds ? 0 : 1;
}

// ---------------------------------------------------------------- run / exact / stream

struct RunArgs {
  std::string in, oracle, report, path_out, mode = "core-verify", sampler = "auto", k = "auto";
  std::uint64_t seed = 0;
  double delta = 0.01;
  double constant = 10.0;
  std::size_t restarts = default_restarts;
  std::size_t hybrid = 0;
  std::uint64_t budget = default_exact_budget;
};

int cmd_run(const RunArgs& a) {
  const EventStream s = load_stream(a.in);
  RunOptions opt;
  const auto mode = parse_extract_mode(a.mode);
  if (!mode) throw std::invalid_argument("--mode must be exact, core-verify or heuristic");
  opt.mode = *mode;
  opt.sampler = a.sampler == "reservoir" ? SamplerKind::reservoir
                : a.sampler == "l0"      ? SamplerKind::l0
                : a.sampler == "auto"    ? SamplerKind::automatic
                                         : throw std::invalid_argument("--sampler must be reservoir, l0 or auto");
  opt.k = a.k == "auto" ? 0 : std::stoull(a.k);
  opt.delta = a.delta;
  opt.sample_constant = a.constant;
  opt.seed = a.seed;
  opt.restarts = a.restarts;
  opt.budget = a.budget;
  Graph oracle;
  if (!a.oracle.empty()) {
    oracle = load_graph(a.oracle);
    opt.oracle = &oracle;
  }
  const RunReport rep = a.hybrid ? hybrid_run(s, a.hybrid, opt) : run_semi_streaming(s, opt);
  const Graph final_graph = apply_stream(s);
  const bool valid = !validate_path(final_graph, rep.path);

  std::ostringstream text;
  text << "mode=" << to_string(rep.mode) << '\n'
       << "sampler=" << to_string(rep.sampler) << '\n'
       << "seed=" << a.seed << '\n'
       << "n=" << s.n << '\n'
       << "m=" << final_graph.edge_count() << '\n'
       << "sample_target=" << rep.sample_target << '\n'
       << "sample_size=" << rep.sample_size << '\n'
       << "stored_edges=" << rep.stored_edges << '\n'
       << "sketch_cells=" << rep.sketch_cells << '\n'
       << "space_used=" << rep.space_used() << '\n'
       << "path_length=" << rep.path.length() << '\n'
       << "path_valid=" << valid << '\n'
       << "exact_complete=" << rep.exact_complete << '\n';
  const std::string path_out = !a.path_out.empty() ? a.path_out : !a.report.empty() ? a.report + ".path" : "";
  if (!path_out.empty()) {
    save_path(path_out, rep.path);
    text << "path_file=" << path_out << '\n';
  }
  if (!a.report.empty()) {
    std::ofstream f(a.report);
    if (!f) throw std::runtime_error("cannot open " + a.report);
    f << text.str();
  }
  std::cout << text.str();
  return valid ? 0 : 1;
}

int cmd_exact(const std::string& in, std::uint64_t budget, const std::string& out) {
  const Graph g = load_graph(in);
  const ExactResult r = exact_longest_path(g, budget);
  std::cout << "length=" << r.path.length() << "\ncomplete=" << r.complete << "\nexpansions=" << r.expansions << '\n';
  if (!out.empty()) save_path(out, r.path);
  else write_path(std::cout, r.path);
  return r.complete ? 0 : 2;
}

int cmd_stream(const std::string& in, const std::string& order, std::uint64_t seed, const std::string& out,
               double decoys) {
  if (order != "natural" && order != "random") throw std::invalid_argument("--order must be natural or random");
  const Graph g = load_graph(in);
  EventStream s = graph_to_stream(g, order == "random" ? StreamOrder::random : StreamOrder::natural, seed);
  if (decoys > 0) s = add_decoys(s, g, static_cast<std::size_t>(decoys * static_cast<double>(g.edge_count())), seed);
  save_stream(out, s);
  std::cout << "wrote " << s.events.size() << " events to " << out << '\n';
  return 0;
}

// ---------------------------------------------------------------- experiment

struct ExperimentArgs {
  std::string name, out, format = "csv";
  ExperimentConfig cfg;
};

int cmd_experiment(CLI::App& sub, ExperimentArgs& a) {
  const auto fmt = parse_report_format(a.format);
  if (!fmt) throw std::invalid_argument("--format must be csv or table");
  std::vector<std::string> names;
  if (a.name == "all") {
    for (const auto& n : experiment_names())
      if (is_acceptance_experiment(n)) names.push_back(n);
  } else {
    names.push_back(a.name);
  }

  bool all_pass = true;
  for (const auto& name : names) {
    ExperimentConfig cfg = default_config(name);
    // Explicit flags override the per-experiment defaults.
    auto given = [&](const char* flag) { return sub.count(flag) > 0; };
    cfg.seed = a.cfg.seed;
    if (given("--trials")) cfg.trials = a.cfg.trials;
    if (given("--n")) cfg.n = a.cfg.n;
    if (given("--d")) cfg.d = a.cfg.d;
    if (given("--m")) cfg.m = a.cfg.m;
    if (given("--k")) cfg.k = a.cfg.k;
    if (given("--r")) cfg.r = a.cfg.r;
    if (given("--N")) cfg.big_n = a.cfg.big_n;
    if (given("--ell")) cfg.ell = a.cfg.ell;
    if (given("--space")) cfg.space = a.cfg.space;
    if (given("--draws")) cfg.draws = a.cfg.draws;
    if (given("--delta")) cfg.delta = a.cfg.delta;
    if (given("--constant")) cfg.sample_constant = a.cfg.sample_constant;
    if (given("--turnstile")) cfg.turnstile = a.cfg.turnstile;
    if (given("--decoys")) cfg.decoy_fraction = a.cfg.decoy_fraction;

    const ExperimentReport rep = run_experiment(cfg);
    std::string out = a.out;
    if (!out.empty() && names.size() > 1) {
      const fs::path p(out);
      out = (p.parent_path() / (p.stem().string() + "-" + name + p.extension().string())).string();
    }
    if (!out.empty()) {
      std::ofstream f(out);
      if (!f) throw std::runtime_error("cannot open " + out);
      emit_report(f, rep, *fmt);
    } else {
      emit_report(std::cout, rep, *fmt);
    }
    std::cerr << (rep.passed ? "PASS " : "FAIL ") << name << (rep.acceptance ? "" : " (not acceptance-tagged)")
              << ": " << rep.summary << '\n';
    if (rep.acceptance && !rep.passed) all_pass = false;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-pass streaming longest path: sampling, exact oracle, hard instances, experiments"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  try {
    seed = default_seed();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  const std::string seed_help = std::string("master seed (default from ") + seed_env + ", else 1)";

  GenArgs gen;
  gen.seed = seed;
  auto* g = app.add_subcommand("gen", "generate a hard instance or a random graph");
  g->add_option("kind", gen.kind, "slp | dlp | undir-reduction | insdel-reduction | gnp | planted")
      ->required()
      ->check(CLI::IsMember({"slp", "dlp", "undir-reduction", "insdel-reduction", "gnp", "planted"}));
  g->add_option("--seed", gen.seed, seed_help);
  g->add_option("--out", gen.out, "output directory")->required();
  g->add_option("--r", gen.r, "matching size (slp; trivial RS graph for dlp/undir)");
  g->add_option("--n", gen.n, "side size / vertex count");
  g->add_option("--N", gen.big_n, "Index length for insdel-reduction (perfect square)");
  g->add_option("--J", gen.j, "index J, 1-based (default: drawn from the seed)");
  g->add_option("--ell", gen.ell, "subdivision length");
  g->add_option("--x", gen.x, "Index bits as a 0/1 string (default: drawn from the seed)");
  g->add_option("--rs", gen.rs_file, "RS graph file for dlp/undir-reduction");
  g->add_option("--d", gen.d, "average degree for gnp/planted");

  std::string s_in, s_out, s_order = "natural";
  std::uint64_t s_seed = seed;
  double s_decoys = 0.0;
  auto* st = app.add_subcommand("stream", "turn an edge list into a stream file");
  st->add_option("--in", s_in)->required();
  st->add_option("--order", s_order, "natural | random");
  st->add_option("--seed", s_seed, seed_help);
  st->add_option("--out", s_out)->required();
  st->add_option("--decoys", s_decoys, "fraction of extra edges inserted then deleted");

  RunArgs run;
  run.seed = seed;
  auto* r = app.add_subcommand("run", "run the one-pass algorithm on a stream file");
  r->add_option("--in", run.in)->required();
  r->add_option("--mode", run.mode, "exact | core-verify | heuristic");
  r->add_option("--oracle", run.oracle, "full graph, needed by core-verify");
  r->add_option("--seed", run.seed, seed_help);
  r->add_option("--report", run.report, "key=value report file");
  r->add_option("--path-out", run.path_out, "path file (default: <report>.path)");
  r->add_option("--sampler", run.sampler, "reservoir | l0 | auto");
  r->add_option("--k", run.k, "sample size: auto or an integer");
  r->add_option("--delta", run.delta, "l0 failure probability");
  r->add_option("--constant", run.constant, "c in k = ceil(c n ln n)");
  r->add_option("--restarts", run.restarts, "greedy restarts");
  r->add_option("--hybrid", run.hybrid, "edge budget s for the hybrid algorithm (0: off)");
  r->add_option("--budget", run.budget, "exact search budget");

  std::string e_in, e_out;
  std::uint64_t e_budget = default_exact_budget;
  auto* ex = app.add_subcommand("exact", "exact longest path of an edge list");
  ex->add_option("--in", e_in)->required();
  ex->add_option("--budget", e_budget, "node expansion budget");
  ex->add_option("--out", e_out, "path file (default: stdout)");

  std::string v_what, v_path;
  fs::path v_dir;
  auto* ve = app.add_subcommand("verify", "check an RS decomposition, a path, or a lemma on an instance");
  ve->add_option("what", v_what, "rs | path | lemma")->required()->check(CLI::IsMember({"rs", "path", "lemma"}));
  ve->add_option("--instance", v_dir, "instance directory (or RS file for 'rs')")->required();
  ve->add_option("--path", v_path, "path file (default: the instance witness)");

  ExperimentArgs xa;
  xa.cfg.seed = seed;
  auto* xp = app.add_subcommand("experiment", "run a named Monte-Carlo experiment");
  xp->add_option("--name", xa.name, "experiment name or 'all'")->required();
  xp->add_option("--out", xa.out, "report file (default: stdout)");
  xp->add_option("--format", xa.format, "csv | table");
  xp->add_option("--seed", xa.cfg.seed, seed_help);
  xp->add_option("--trials", xa.cfg.trials);
  xp->add_option("--n", xa.cfg.n);
  xp->add_option("--d", xa.cfg.d);
  xp->add_option("--m", xa.cfg.m, "support size (sampler-uniformity)");
  xp->add_option("--k", xa.cfg.k, "sample size (sampler-uniformity)");
  xp->add_option("--r", xa.cfg.r);
  xp->add_option("--N", xa.cfg.big_n);
  xp->add_option("--ell", xa.cfg.ell);
  xp->add_option("--space", xa.cfg.space);
  xp->add_option("--draws", xa.cfg.draws);
  xp->add_option("--delta", xa.cfg.delta);
  xp->add_option("--constant", xa.cfg.sample_constant);
  xp->add_flag("--turnstile", xa.cfg.turnstile, "feed theorem1 an insertion-deletion stream with decoys");
  xp->add_option("--decoys", xa.cfg.decoy_fraction);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*g) return cmd_gen(gen);
    if (*st) return cmd_stream(s_in, s_order, s_seed, s_out, s_decoys);
    if (*r) return cmd_run(run);
    if (*ex) return cmd_exact(e_in, e_budget, e_out);
    if (*ve) return cmd_verify(v_what, v_dir, v_path);
    if (*xp) return cmd_experiment(*xp, xa);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
