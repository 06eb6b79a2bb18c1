// Serial reference vs OpenMP kernel, side by side. Each pair runs on the same
// input; the parallel variant is expected to give identical output, which the
// unit tests check, so only time is reported here.

#include <benchmark/benchmark.h>

#include "longpath/exact.hpp"
#include "longpath/generators.hpp"
#include "longpath/harness.hpp"
#include "longpath/pathfinder.hpp"
#include "longpath/samplers.hpp"

using namespace longpath;

namespace {

const EventStream& churn() {
  static const EventStream s = [] {
    const Graph g = gnp(60, 0.2, 11);
    return add_decoys(graph_to_stream(g, StreamOrder::random, 11), g, 200, 11);
  }();
  return s;
}

template <bool Parallel>
void bank_ingest(benchmark::State& state) {
  const EventStream& s = churn();
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    L0SketchBank bank(count, 60 * 60, 0.05, 3);
    if constexpr (Parallel) bank.ingest(s);
    else bank.ingest_serial(s);
    benchmark::DoNotOptimize(bank);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * count * s.events.size()));
}

template <bool Parallel>
void exact_dp(benchmark::State& state) {
  const Graph g = gnp(static_cast<std::size_t>(state.range(0)), 0.3, 5);
  for (auto _ : state) {
    ExactResult r = Parallel ? exact_longest_path(g, default_exact_budget, ExactMethod::bitmask_dp)
                             : exact_longest_path_serial(g);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void extract(benchmark::State& state) {
  static const Graph g = gnp(400, 0.1, 2);
  static const SampleF f = reservoir_sample(graph_to_stream(g, StreamOrder::random, 2), 2400, 2);
  ExtractOptions opt;
  opt.mode = ExtractMode::heuristic;
  opt.oracle = &g;
  opt.seed = 2;
  for (auto _ : state) {
    ExtractResult r = Parallel ? extract_path_from_sample(f, 400, false, opt) : extract_path_serial(f, 400, false, opt);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void experiment(benchmark::State& state) {
  ExperimentConfig cfg = default_config("golomb");
  cfg.r = 400;
  cfg.trials = 64;
  for (auto _ : state) {
    ExperimentReport r = Parallel ? run_experiment(cfg) : run_experiment_serial(cfg);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(bank_ingest<false>)->Name("bank_ingest/serial")->Arg(64)->Arg(256);
BENCHMARK(bank_ingest<true>)->Name("bank_ingest/omp")->Arg(64)->Arg(256);
BENCHMARK(exact_dp<false>)->Name("exact_dp/serial")->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(exact_dp<true>)->Name("exact_dp/omp")->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(extract<false>)->Name("extract/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(extract<true>)->Name("extract/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(experiment<false>)->Name("experiment/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(experiment<true>)->Name("experiment/omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
