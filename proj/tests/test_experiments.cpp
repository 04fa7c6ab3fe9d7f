#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "kpzlab/experiments.hpp"

using namespace kpzlab;
namespace fs = std::filesystem;

namespace {

ExperimentConfig small_stationary() {
  ExperimentConfig cfg;
  cfg.scenario = Scenario::Stationary;
  cfg.theta = 1.0;
  cfg.times = {0.5, 1.0};
  cfg.dx = 0.1;
  cfg.replicas = 24;
  cfg.seed = 99;
  cfg.workers = 1;
  return cfg;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config validation and names") {
  ExperimentConfig cfg = small_stationary();
  CHECK_NOTHROW(cfg.validate());
  cfg.times.clear();
  CHECK_THROWS(cfg.validate());
  cfg = small_stationary();
  cfg.theta = -1.0;
  CHECK_THROWS(cfg.validate());
  cfg = small_stationary();
  cfg.replicas = 0;
  CHECK_THROWS(cfg.validate());

  for (Scenario s : {Scenario::Stationary, Scenario::Flat, Scenario::Tilted,
                     Scenario::ShockFrame, Scenario::Shear, Scenario::VMixture,
                     Scenario::HalflineRatio})
    CHECK(scenario_from_name(scenario_name(s)) == s);
  CHECK_THROWS(scenario_from_name("no-such-scenario"));
}

TEST_CASE("config JSON round-trip") {
  ExperimentConfig cfg = small_stationary();
  cfg.domain_half_width = 7.5;
  const fs::path path = fs::temp_directory_path() / "kpzlab_cfg.json";
  {
    std::ofstream out(path);
    out << cfg.to_json();
  }
  const ExperimentConfig back = ExperimentConfig::from_json_file(path.string());
  CHECK(back.scenario == cfg.scenario);
  CHECK(back.theta == cfg.theta);
  CHECK(back.times == cfg.times);
  CHECK(back.dx == cfg.dx);
  CHECK(back.replicas == cfg.replicas);
  CHECK(back.seed == cfg.seed);
  CHECK(back.domain_half_width == cfg.domain_half_width);
  fs::remove(path);
}

TEST_CASE("ensembles are identical for any worker count") {
  ExperimentConfig one = small_stationary();
  ExperimentConfig four = small_stationary();
  four.workers = 4;
  const EnsembleResult a = run_experiment(one);
  const EnsembleResult b = run_experiment(four);
  REQUIRE(a.records.size() == b.records.size());
  for (size_t r = 0; r < a.records.size(); ++r) {
    REQUIRE(a.records[r].size() == b.records[r].size());
    for (size_t k = 0; k < a.records[r].size(); ++k) {
      CHECK(a.records[r][k].b == b.records[r][k].b);
      CHECK(a.records[r][k].j0 == b.records[r][k].j0);
    }
  }
  // Re-running the same config replays the same ensemble bitwise.
  const EnsembleResult c = run_experiment(one);
  for (size_t r = 0; r < a.records.size(); ++r)
    CHECK(a.records[r].back().j0 == c.records[r].back().j0);
}

TEST_CASE("output tree: manifest, samples, summary, plots") {
  const fs::path dir = fs::temp_directory_path() / "kpzlab_exp_out";
  fs::remove_all(dir);
  ExperimentConfig cfg = small_stationary();
  cfg.output_dir = dir.string();
  const EnsembleResult res = run_experiment(cfg);
  CHECK(fs::exists(dir / "manifest.json"));
  CHECK(fs::exists(dir / "summary.json"));
  CHECK(fs::exists(dir / "samples" / "shock_records.csv"));
  CHECK(fs::exists(dir / "plots" / "shock_traces.svg"));

  const std::string manifest = slurp(dir / "manifest.json");
  CHECK(manifest.find("\"seed\": 99") != std::string::npos);
  const std::string records = slurp(dir / "samples" / "shock_records.csv");
  CHECK(records.find("replica,t,b,j0,unique,violations") != std::string::npos);
  const std::string summary = slurp(dir / "summary.json");
  CHECK(summary.find("var_j0_over_t") != std::string::npos);

  // Deterministic artifacts: a second run writes byte-identical plots.
  const std::string svg1 = slurp(dir / "plots" / "shock_traces.svg");
  fs::remove_all(dir);
  run_experiment(cfg);
  CHECK(slurp(dir / "plots" / "shock_traces.svg") == svg1);
  fs::remove_all(dir);
}

TEST_CASE("plot emission needs a populated ensemble") {
  EnsembleResult empty;
  CHECK_THROWS(emit_plots(empty, "/tmp/kpzlab_noplots"));
}

TEST_CASE("summaries carry per-time moments and the uniqueness rate") {
  const EnsembleResult res = run_experiment(small_stationary());
  REQUIRE(res.summaries.size() == 2);
  CHECK(res.summaries[0].t == 0.5);
  CHECK(res.summaries[1].t == 1.0);
  for (const TimeSummary& s : res.summaries) {
    CHECK(s.var_j0 > 0.0);
    CHECK(s.unique_rate >= 0.0);
    CHECK(s.unique_rate <= 1.0);
  }
  CHECK(res.fit_j0.has_value());
  CHECK_FALSE(res.target.empty());
}
