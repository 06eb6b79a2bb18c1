#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "longpath/exact.hpp"
#include "longpath/graph.hpp"
#include "longpath/samplers.hpp"
#include "longpath/stream.hpp"

namespace longpath {

struct CoreResult {
  std::vector<Vertex> core;           // ascending
  std::vector<bool> in_core;          // indexed by vertex
  AverageDegree threshold;            // d of the original graph; removal test is degree <= d/2
  std::vector<Vertex> removal_order;
};

/// Removes, one at a time, a vertex of smallest current degree (ties by id)
/// while that degree is at most d/2 for the original d. Degree is total
/// degree for directed graphs. Throws std::invalid_argument when m = 0.
CoreResult peel_core(const Graph& g);

/// Walks from `start` to the lowest-id unvisited out-neighbor in `allowed`
/// until none is left or the path holds `cap` vertices.
PathWitness greedy_extend(const Graph& allowed, Vertex start, std::size_t cap = SIZE_MAX);

enum class ExtractMode { exact, core_verify, heuristic };
enum class RunMode { exact, core_verify, heuristic, hybrid_exact, hybrid_sampled };

const char* to_string(ExtractMode mode);
const char* to_string(RunMode mode);
std::optional<ExtractMode> parse_extract_mode(const std::string& text);

inline constexpr std::size_t default_restarts = 10;

struct ExtractOptions {
  ExtractMode mode = ExtractMode::core_verify;
  const Graph* oracle = nullptr;  // required for core_verify
  std::size_t restarts = default_restarts;
  std::uint64_t seed = 0;
  std::uint64_t budget = default_exact_budget;
};

struct ExtractResult {
  PathWitness path;
  bool exact_complete = true;  // exact mode only: false when the oracle ran out of budget and greedy was used
};

/// Longest path in G[F] according to the mode. Greedy restarts are parallel;
/// `extract_path_serial` is the one-thread reference and returns the same path.
ExtractResult extract_path_from_sample(const SampleF& f, std::size_t n, bool directed, const ExtractOptions& opt);
ExtractResult extract_path_serial(const SampleF& f, std::size_t n, bool directed, const ExtractOptions& opt);

enum class SamplerKind { automatic, reservoir, l0 };

const char* to_string(SamplerKind kind);

struct RunOptions {
  ExtractMode mode = ExtractMode::core_verify;
  SamplerKind sampler = SamplerKind::automatic;
  std::size_t k = 0;  // 0: ceil(sample_constant * n ln n)
  double sample_constant = 10.0;
  double delta = 0.01;
  TurnstileMethod turnstile = TurnstileMethod::subsampled_recovery;
  std::uint64_t seed = 0;
  const Graph* oracle = nullptr;
  std::size_t restarts = default_restarts;
  std::uint64_t budget = default_exact_budget;
};

struct RunReport {
  PathWitness path;
  RunMode mode = RunMode::core_verify;
  SamplerKind sampler = SamplerKind::reservoir;
  std::size_t sample_target = 0;
  std::size_t sample_size = 0;
  std::size_t stored_edges = 0;  // edges held by the sampler (and the hybrid store)
  std::size_t sketch_cells = 0;
  bool exact_complete = true;

  std::size_t space_used() const noexcept { return stored_edges + sketch_cells; }
};

/// One pass: reservoir for insertion-only streams, linear sketches otherwise.
RunReport run_semi_streaming(const EventStream& s, const RunOptions& opt);

/// Runs the sampler next to a store of up to `space` distinct edges. If the
/// final graph fits, returns its exact longest path; otherwise the sampled one.
/// Requires space >= the sampler's k.
RunReport hybrid_run(const EventStream& s, std::size_t space, const RunOptions& opt);

}  // namespace longpath
