#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kpzlab/field.hpp"
#include "kpzlab/shock.hpp"
#include "kpzlab/stats.hpp"

namespace kpzlab {

enum class Scenario {
  Stationary,     // jointly invariant pair; Gaussian t^{1/2} gap fluctuations
  Flat,           // deterministic tilted pair; t^{1/3} GOE-difference law
  Tilted,         // shock-frame importance weights on the invariant pair
  ShockFrame,     // shift-to-shock idempotence of the b-increment law
  Shear,          // pair with tilts theta1 < theta2; shock velocity fit
  VMixture,       // V-shaped data; which member the V profile tracks
  HalflineRatio,  // absorbing-wall partition-function ratio
};

std::string scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& name);

struct ExperimentConfig {
  Scenario scenario = Scenario::Stationary;
  double theta = 1.0;
  double theta1 = 0.0;  // shear only
  double theta2 = 0.0;
  std::vector<double> times;
  double dx = 0.05;
  double dt_factor = 0.4;
  int64_t replicas = 100;
  uint64_t seed = 1;
  std::string output_dir;
  double domain_half_width = 0.0;  // 0 = derived from theta and max time
  int workers = 0;                 // 0 = hardware concurrency

  void validate() const;
  static ExperimentConfig from_json_file(const std::string& path);
  std::string to_json() const;
};

// One named threshold check, serialized into summary.json.
struct CheckResult {
  std::string name;
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  bool pass = false;
};

struct TimeSummary {
  double t = 0.0;
  double mean_j0 = 0.0;
  double var_j0 = 0.0;
  double iqr_j0 = 0.0;
  double mean_b = 0.0;
  double var_b = 0.0;
  double iqr_b = 0.0;
  double unique_rate = 1.0;
  // Weighted moments, present only for the tilted scenario.
  std::optional<double> w_var_j0;
  std::optional<double> w_var_b;
};

struct EnsembleResult {
  ExperimentConfig config;
  std::string target;  // plain-words statement of the law being probed
  std::vector<std::vector<ShockRecord>> records;  // [replica][time index]
  std::vector<double> weights;                    // tilted scenario only
  std::vector<TimeSummary> summaries;
  std::vector<CheckResult> checks;
  std::optional<ScalingFit> fit_j0;
  std::optional<ScalingFit> fit_b;
  std::optional<double> velocity;  // shear
  // Extra per-replica series for scenarios without shock records
  // (half-line ratios, v-mixture tracking outcomes).
  std::vector<std::string> extra_columns;
  std::vector<std::vector<double>> extra;  // [replica][column]
  std::vector<std::string> notes;

  bool all_pass() const;
};

// Runs the configured scenario over all replicas (worker pool, results
// keyed by replica id so output is identical for any worker count) and, if
// output_dir is set, writes manifest.json, samples/*.csv, summary.json and
// plots/*.svg.
EnsembleResult run_experiment(const ExperimentConfig& cfg);

struct InvarianceReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// Fixed-time stationarity battery: increment laws at t=0 vs t=1 for the
// one-point and coupled invariant data, the Gamma law of the gap slope
// re-estimated at t=1, and the shift-to-shock idempotence comparison.
InvarianceReport run_invariance_suite(const ExperimentConfig& cfg);

// Deterministic SVGs (no timestamps): histogram vs reference CDF overlay,
// log-log scaling fit, shock-trace spaghetti. Throws on an empty ensemble.
void emit_plots(const EnsembleResult& result, const std::string& dir);

void write_outputs(const EnsembleResult& result);

}  // namespace kpzlab
