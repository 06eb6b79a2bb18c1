#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace longpath {

struct ExperimentConfig {
  std::string name;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::size_t n = 1000;
  double d = 300.0;
  std::size_t m = 1000;  // support size (sampler-uniformity)
  std::size_t k = 10;    // sample size (sampler-uniformity)
  std::size_t r = 2000;
  std::size_t big_n = 4;  // Index length N (insdel-lemmas)
  std::size_t ell = 4;
  std::size_t space = 1'000'000;
  std::size_t draws = 10'000;
  double delta = 0.01;
  double sample_constant = 10.0;
  bool turnstile = false;
  double decoy_fraction = 0.1;
  std::size_t restarts = 10;
  std::uint64_t path_budget = 50'000'000;  // cap on enumerated paths per instance
};

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double value = 0.0;
  double reference = 0.0;
  double ratio = 0.0;
  bool success = false;
  std::size_t space = 0;
};

struct ExperimentReport {
  std::string name;
  bool acceptance = false;  // tagged experiments decide the CLI exit code
  std::vector<TrialRecord> trials;
  double mean_value = 0.0;
  double mean_ratio = 0.0;
  double success_rate = 0.0;
  double ci_low = 0.0, ci_high = 0.0;  // Wilson 95% interval on the success rate
  std::uint64_t seed = 0;
  bool passed = false;
  std::string summary;
};

const std::vector<std::string>& experiment_names();
bool is_acceptance_experiment(const std::string& name);

/// Per-experiment parameter defaults; throws std::invalid_argument for an unknown name.
ExperimentConfig default_config(const std::string& name);

/// Trials run in parallel over disjoint seeds; the serial variant is the
/// reference and produces an identical report.
ExperimentReport run_experiment(const ExperimentConfig& cfg);
ExperimentReport run_experiment_serial(const ExperimentConfig& cfg);

/// Fills the aggregates from the trial records.
void aggregate(ExperimentReport& rep);

enum class ReportFormat { csv, table };

std::optional<ReportFormat> parse_report_format(const std::string& text);
void emit_report(std::ostream& out, const ExperimentReport& rep, ReportFormat format);

}  // namespace longpath
