#include <doctest.h>

#include <sstream>

#include "longpath/harness.hpp"

using namespace longpath;

namespace {

std::string emit(const ExperimentReport& rep, ReportFormat f) {
  std::ostringstream out;
  emit_report(out, rep, f);
  return out.str();
}

std::size_t lines(const std::string& text) {
  std::size_t n = 0;
  for (const char c : text) n += c == '\n';
  return n;
}

bool same(const ExperimentReport& a, const ExperimentReport& b) {
  return emit(a, ReportFormat::csv) == emit(b, ReportFormat::csv) && a.passed == b.passed &&
         a.summary == b.summary;
}

}  // namespace

TEST_CASE("experiment registry") {
  CHECK(experiment_names().size() == 8);
  for (const auto& name : experiment_names()) CHECK(default_config(name).name == name);
  CHECK_FALSE(is_acceptance_experiment("index-roundtrip"));
  CHECK(is_acceptance_experiment("theorem1"));
  CHECK_THROWS_AS(default_config("nope"), std::invalid_argument);
  CHECK(parse_report_format("csv") == ReportFormat::csv);
  CHECK(parse_report_format("table") == ReportFormat::table);
  CHECK_FALSE(parse_report_format("json"));
}

TEST_CASE("report layout") {
  ExperimentReport empty;
  empty.name = "golomb";
  const std::string header = emit(empty, ReportFormat::csv);
  CHECK(lines(header) == 1);
  CHECK(header.rfind("trial,seed,value,reference,ratio,success,space", 0) == 0);

  ExperimentConfig cfg = default_config("golomb");
  cfg.trials = 3;
  cfg.r = 50;
  const ExperimentReport rep = run_experiment(cfg);
  CHECK(rep.trials.size() == 3);
  const std::string csv = emit(rep, ReportFormat::csv);
  CHECK(lines(csv) == 5);
  CHECK(csv.find("\naggregate,") != std::string::npos);
  CHECK(lines(emit(rep, ReportFormat::table)) >= 5);
}

TEST_CASE("aggregates and the Wilson interval") {
  ExperimentReport rep;
  for (std::size_t i = 0; i < 10; ++i) rep.trials.push_back({i, 0, double(i), 1.0, 2.0, i < 8, 0});
  aggregate(rep);
  CHECK(rep.mean_value == doctest::Approx(4.5));
  CHECK(rep.mean_ratio == doctest::Approx(2.0));
  CHECK(rep.success_rate == doctest::Approx(0.8));
  CHECK(rep.ci_low == doctest::Approx(0.4902).epsilon(1e-3));
  CHECK(rep.ci_high == doctest::Approx(0.9433).epsilon(1e-3));
}

TEST_CASE("same seed, same report; parallel equals serial") {
  for (const std::string name : {"golomb", "dlp-struct", "undir-lemmas", "hybrid", "index-roundtrip"}) {
    ExperimentConfig cfg = default_config(name);
    cfg.trials = std::min<std::size_t>(cfg.trials, 6);
    if (name == "golomb") cfg.r = 100;
    cfg.seed = 42;
    const ExperimentReport a = run_experiment(cfg);
    CHECK(same(a, run_experiment(cfg)));
    CHECK(same(a, run_experiment_serial(cfg)));
    cfg.seed = 43;
    if (name != "dlp-struct" && name != "undir-lemmas") CHECK_FALSE(same(a, run_experiment(cfg)));
  }
}

TEST_CASE("small experiment runs") {
  ExperimentConfig t1 = default_config("theorem1");
  t1.n = 200;
  t1.d = 40;
  t1.trials = 4;
  const ExperimentReport rep = run_experiment(t1);
  CHECK(rep.passed);
  t1.turnstile = true;
  CHECK(run_experiment(t1).passed);

  ExperimentConfig u = default_config("sampler-uniformity");
  u.trials = 2;
  u.m = 100;
  u.k = 5;
  u.draws = 4000;
  CHECK(run_experiment(u).passed);

  ExperimentConfig ins = default_config("insdel-lemmas");
  ins.n = 4;
  CHECK(run_experiment(ins).passed);

  ExperimentConfig bad = default_config("theorem1");
  bad.trials = 0;
  CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
}
