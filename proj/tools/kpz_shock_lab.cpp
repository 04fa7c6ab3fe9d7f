// kpz-shock-lab: command line front end for the coupled KPZ / stochastic
// heat equation laboratory. Subcommands: sample, evolve, halfline,
// experiment, stats. Exit code 0 only when every configured threshold
// check passes.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kpzlab/experiments.hpp"
#include "kpzlab/field.hpp"
#include "kpzlab/halfline.hpp"
#include "kpzlab/rng.hpp"
#include "kpzlab/samplers.hpp"
#include "kpzlab/shock.hpp"
#include "kpzlab/solver.hpp"
#include "kpzlab/stats.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace kpzlab;

namespace {

struct GridArgs {
  double left = 10.0;
  double right = 10.0;
  double dx = 0.05;
  double dt_factor = 0.4;

  GridSpec build() const { return make_grid(left, right, dx, dt_factor); }
};

void add_grid_flags(CLI::App* app, GridArgs* g) {
  app->add_option("--left", g->left, "domain extent below 0");
  app->add_option("--right", g->right, "domain extent above 0");
  app->add_option("--dx", g->dx, "grid spacing");
  app->add_option("--dt-factor", g->dt_factor, "dt = dt_factor * dx^2");
}

void write_snapshot_csv(const std::string& path, const CoupledState& st,
                        double theta, uint64_t seed) {
  std::ofstream out(path);
  out.precision(12);
  const GridSpec& g = st.h_minus.grid;
  out << "# t=" << st.t() << " theta=" << theta << " dx=" << g.dx
      << " dt=" << g.dt << " seed=" << seed << "\n";
  out << "x,h_minus,h_plus";
  if (st.h_v) out << ",h_v";
  out << "\n";
  for (int64_t i = 0; i < g.n; ++i) {
    out << g.x_at(i) << "," << st.h_minus.h[static_cast<size_t>(i)] << ","
        << st.h_plus.h[static_cast<size_t>(i)];
    if (st.h_v) out << "," << st.h_v->h[static_cast<size_t>(i)];
    out << "\n";
  }
}

void write_single_csv(const std::string& path, const FieldState& f,
                      double theta, uint64_t seed) {
  std::ofstream out(path);
  out.precision(12);
  out << "# t=" << f.t << " theta=" << theta << " dx=" << f.grid.dx
      << " dt=" << f.grid.dt << " seed=" << seed << "\n";
  out << "x,h\n";
  for (int64_t i = 0; i < f.grid.n; ++i)
    out << f.grid.x_at(i) << "," << f.h[static_cast<size_t>(i)] << "\n";
}

int cmd_sample(const std::string& law, double theta, const GridArgs& ga,
               int64_t n_samples, uint64_t seed, const std::string& out_dir) {
  const GridSpec grid = ga.build();
  fs::create_directories(out_dir);
  json summary;
  summary["law"] = law;
  summary["theta"] = theta;
  summary["seed"] = seed;
  json per_sample = json::array();
  for (int64_t i = 0; i < n_samples; ++i) {
    NoiseStream stream(
        StreamKey{seed, static_cast<uint32_t>(i), NoisePurpose::InitialData});
    json row;
    row["sample"] = i;
    std::ostringstream name;
    name << out_dir << "/sample_" << i << ".csv";
    if (law == "mu") {
      PathSample p = sample_bm_with_drift(stream, grid, theta);
      FieldState f = to_field(p, theta, theta);
      write_single_csv(name.str(), f, theta, seed);
      row["pin_ok"] = validate_space(f, SpaceKind::CKpz0, theta).pass;
    } else if (law == "nu" || law == "nu-hat") {
      WeightedPairSample pair = sample_nu_theta(stream, grid, theta);
      if (law == "nu-hat") pair.weight = hat_nu_weight(pair);
      CoupledState st;
      st.h_minus = to_field(pair.f_minus, -theta, -theta);
      st.h_plus = to_field(pair.f_plus, theta, theta);
      write_snapshot_csv(name.str(), st, theta, seed);
      row["weight"] = pair.weight;
      row["derivative_at_zero"] = pair.gap_derivative_at_zero;
      row["tail_bound"] = pair.tail_bound;
      const SpaceReport rep =
          validate_space_pair(st.h_minus, st.h_plus, SpaceKind::X, theta);
      row["space_ok"] = rep.pass;
      row["space_detail"] = rep.detail;
    } else if (law == "flat") {
      auto [fm, fp] = flat_pair(theta, grid);
      CoupledState st;
      st.h_minus = to_field(fm, -theta, -theta);
      st.h_plus = to_field(fp, theta, theta);
      write_snapshot_csv(name.str(), st, theta, seed);
      row["space_ok"] = true;
    } else if (law == "v-abs") {
      PathSample v = v_abs_profile(theta, grid);
      FieldState f = to_field(v, -theta, theta);
      write_single_csv(name.str(), f, theta, seed);
      row["space_ok"] = validate_space(f, SpaceKind::V, theta).pass;
    } else {
      std::cerr << "unknown law: " << law << "\n";
      return 2;
    }
    per_sample.push_back(row);
  }
  summary["samples"] = per_sample;
  std::ofstream js(out_dir + "/summary.json");
  js << summary.dump(2) << "\n";
  std::cout << "wrote " << n_samples << " sample(s) to " << out_dir << "\n";
  return 0;
}

int cmd_evolve(const std::string& law, double theta, const GridArgs& ga,
               double t_end, const std::vector<double>& record,
               const std::string& scheme, uint64_t seed, int64_t replicas,
               const std::string& out_dir) {
  const GridSpec grid = ga.build();
  fs::create_directories(out_dir);
  SchemeConfig cfg;
  if (scheme == "explicit-euler")
    cfg.scheme = Scheme::ExplicitEuler;
  else if (scheme != "split-exponential") {
    std::cerr << "unknown scheme: " << scheme << "\n";
    return 2;
  }
  cfg.record_times = record;

  json manifest;
  manifest["tool"] = "kpz-shock-lab";
  manifest["version"] = "1.0.0";
  manifest["law"] = law;
  manifest["theta"] = theta;
  manifest["t_end"] = t_end;
  manifest["record"] = record;
  manifest["scheme"] = scheme;
  manifest["seed"] = seed;
  manifest["replicas"] = replicas;
  manifest["dx"] = grid.dx;
  manifest["dt"] = grid.dt;

  std::ofstream trace(out_dir + "/shock_trace.csv");
  trace.precision(12);
  trace << "replica,t,b,j0,unique,violations\n";

  for (int64_t rep = 0; rep < replicas; ++rep) {
    CoupledState st;
    if (law == "nu") {
      NoiseStream stream(StreamKey{seed, static_cast<uint32_t>(rep),
                                   NoisePurpose::InitialData});
      WeightedPairSample pair = sample_nu_theta(stream, grid, theta);
      st.h_minus = to_field(pair.f_minus, -theta, -theta);
      st.h_plus = to_field(pair.f_plus, theta, theta);
    } else if (law == "flat") {
      auto [fm, fp] = flat_pair(theta, grid);
      st.h_minus = to_field(fm, -theta, -theta);
      st.h_plus = to_field(fp, theta, theta);
    } else {
      std::cerr << "unknown law for evolve: " << law << "\n";
      return 2;
    }
    const StreamKey key{seed, static_cast<uint32_t>(rep),
                        NoisePurpose::Dynamics};
    CoupledTrajectory traj = evolve_coupled(st, key, t_end, cfg);
    for (const auto& snap : traj.snapshots) {
      std::ostringstream name;
      name << out_dir << "/replica_" << rep << "_t_" << snap.t() << ".csv";
      write_snapshot_csv(name.str(), snap, theta, seed);
      const ShockRecord sr = find_shock(snap);
      trace << rep << "," << sr.t << "," << sr.b << "," << sr.j0 << ","
            << (sr.unique ? 1 : 0) << "," << sr.violations << "\n";
    }
  }
  std::ofstream js(out_dir + "/manifest.json");
  js << manifest.dump(2) << "\n";
  std::cout << "evolved " << replicas << " replica(s) to t=" << t_end << "\n";
  return 0;
}

int cmd_halfline(double theta, const GridArgs& ga, double t_end,
                 const std::vector<double>& probe_x, uint64_t seed,
                 int64_t replicas, const std::string& out_dir) {
  fs::create_directories(out_dir);
  const GridSpec full_grid = ga.build();
  GridSpec half_grid = make_grid(ga.dx, ga.right, ga.dx, ga.dt_factor);
  half_grid.x_min = 0.0;
  half_grid.n -= 1;
  half_grid.origin_index = 0;
  half_grid.validate();

  std::ofstream csv(out_dir + "/ratios.csv");
  csv.precision(12);
  csv << "replica,t,x,ratio\n";
  SchemeConfig cfg;
  for (int64_t rep = 0; rep < replicas; ++rep) {
    const StreamKey key{seed, static_cast<uint32_t>(rep),
                        NoisePurpose::Dynamics};
    FieldState full0;
    full0.grid = full_grid;
    full0.slope_left = theta;
    full0.slope_right = theta;
    full0.h.resize(static_cast<size_t>(full_grid.n));
    for (int64_t i = 0; i < full_grid.n; ++i)
      full0.h[static_cast<size_t>(i)] = theta * full_grid.x_at(i);
    const FieldState full = evolve_field(full0, key, t_end, cfg).back();
    const FieldState half =
        evolve_halfline(theta, +1, half_grid, key, t_end, cfg);
    for (double x : probe_x)
      csv << rep << "," << t_end << "," << x << ","
          << restriction_ratio(half, full, x) << "\n";
  }
  std::cout << "wrote " << out_dir << "/ratios.csv\n";
  return 0;
}

int cmd_stats_ks(const std::string& input, const std::string& ref,
                 double mean, double var, double shape, double rate,
                 double threshold) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "cannot open " << input << "\n";
    return 2;
  }
  std::vector<double> samples;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    try {
      samples.push_back(std::stod(line));
    } catch (const std::exception&) {
    }
  }
  double d;
  if (ref == "gaussian")
    d = ks_distance(samples, gaussian_cdf, mean, var);
  else if (ref == "gamma")
    d = ks_distance(samples, gamma_cdf, shape, rate);
  else if (ref == "tw-goe")
    d = ks_distance(samples, tw_goe_table());
  else if (ref == "tw-goe-diff")
    d = ks_distance(samples, tw_goe_diff_table());
  else {
    std::cerr << "unknown reference: " << ref << "\n";
    return 2;
  }
  json out = {{"test", "ks_vs_" + ref},
              {"n", samples.size()},
              {"statistic", d},
              {"threshold", threshold},
              {"pass", d < threshold}};
  std::cout << out.dump(2) << "\n";
  return d < threshold ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo laboratory for coupled KPZ / stochastic heat "
               "equation shock statistics"};
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "draw initial-data samples");
  std::string law = "nu";
  double theta = 1.0;
  GridArgs ga;
  int64_t n_samples = 1;
  uint64_t seed = 1;
  std::string out_dir = "out";
  sample->add_option("--law", law, "mu | nu | nu-hat | flat | v-abs");
  sample->add_option("--theta", theta, "drift parameter");
  add_grid_flags(sample, &ga);
  sample->add_option("--n-samples", n_samples, "number of samples");
  sample->add_option("--seed", seed, "master seed");
  sample->add_option("--output-dir", out_dir, "output directory");

  // evolve
  auto* evolve = app.add_subcommand("evolve", "evolve a coupled pair");
  std::string elaw = "nu";
  double etheta = 1.0;
  GridArgs ega;
  double t_end = 1.0;
  std::vector<double> record;
  std::string scheme = "split-exponential";
  uint64_t eseed = 1;
  int64_t replicas = 1;
  std::string eout = "out";
  evolve->add_option("--law", elaw, "nu | flat");
  evolve->add_option("--theta", etheta, "drift parameter");
  add_grid_flags(evolve, &ega);
  evolve->add_option("--t-end", t_end, "final time");
  evolve->add_option("--record", record, "record times")->delimiter(',');
  evolve->add_option("--scheme", scheme,
                     "split-exponential | explicit-euler");
  evolve->add_option("--seed", eseed, "master seed");
  evolve->add_option("--replicas", replicas, "replica count");
  evolve->add_option("--output-dir", eout, "output directory");

  // halfline
  auto* half = app.add_subcommand("halfline",
                                  "absorbing-wall run and restriction ratio");
  double htheta = 1.0;
  GridArgs hga;
  double ht_end = 1.0;
  std::vector<double> probe_x = {1.0};
  uint64_t hseed = 1;
  int64_t hreplicas = 1;
  std::string hout = "out";
  half->add_option("--theta", htheta, "drift parameter");
  add_grid_flags(half, &hga);
  half->add_option("--t-end", ht_end, "final time");
  half->add_option("--probe-x", probe_x, "ratio probe locations")
      ->delimiter(',');
  half->add_option("--seed", hseed, "master seed");
  half->add_option("--replicas", hreplicas, "replica count");
  half->add_option("--output-dir", hout, "output directory");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "scenario ensembles");
  auto* exp_run = experiment->add_subcommand("run", "run a config");
  std::string config_path;
  std::optional<uint64_t> seed_override;
  std::optional<int64_t> replicas_override;
  std::optional<std::string> out_override;
  exp_run->add_option("--config", config_path, "JSON config path")
      ->required();
  exp_run->add_option("--seed", seed_override, "override config seed");
  exp_run->add_option("--replicas", replicas_override,
                      "override config replicas");
  exp_run->add_option("--output-dir", out_override,
                      "override config output dir");
  auto* exp_inv =
      experiment->add_subcommand("invariance", "fixed-time stationarity suite");
  std::string inv_config;
  exp_inv->add_option("--config", inv_config, "JSON config path")->required();

  // stats
  auto* stats = app.add_subcommand("stats", "distributional utilities");
  auto* ks = stats->add_subcommand("ks", "KS distance of a sample column");
  std::string ks_input, ks_ref = "gaussian";
  double ks_mean = 0.0, ks_var = 1.0, ks_shape = 1.0, ks_rate = 1.0;
  double ks_threshold = 0.05;
  ks->add_option("--input", ks_input, "file with one value per line")
      ->required();
  ks->add_option("--ref", ks_ref, "gaussian | gamma | tw-goe | tw-goe-diff");
  ks->add_option("--mean", ks_mean, "gaussian mean");
  ks->add_option("--var", ks_var, "gaussian variance");
  ks->add_option("--shape", ks_shape, "gamma shape");
  ks->add_option("--rate", ks_rate, "gamma rate");
  ks->add_option("--threshold", ks_threshold, "pass threshold");
  auto* table = stats->add_subcommand("table", "export a reference table");
  std::string table_which = "tw-goe", table_out = "table.csv";
  table->add_option("--which", table_which, "tw-goe | tw-goe-diff");
  table->add_option("--out", table_out, "CSV output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sample)
      return cmd_sample(law, theta, ga, n_samples, seed, out_dir);
    if (*evolve)
      return cmd_evolve(elaw, etheta, ega, t_end, record, scheme, eseed,
                        replicas, eout);
    if (*half)
      return cmd_halfline(htheta, hga, ht_end, probe_x, hseed, hreplicas,
                          hout);
    if (*exp_run) {
      ExperimentConfig cfg = ExperimentConfig::from_json_file(config_path);
      if (seed_override) cfg.seed = *seed_override;
      if (replicas_override) cfg.replicas = *replicas_override;
      if (out_override) cfg.output_dir = *out_override;
      EnsembleResult result = run_experiment(cfg);
      for (const auto& c : result.checks)
        std::cout << (c.pass ? "pass " : "FAIL ") << c.name << " = "
                  << c.value << " (allowed [" << c.lo << ", " << c.hi
                  << "])\n";
      for (const auto& n : result.notes) std::cout << "note: " << n << "\n";
      return result.all_pass() ? 0 : 1;
    }
    if (*exp_inv) {
      ExperimentConfig cfg = ExperimentConfig::from_json_file(inv_config);
      InvarianceReport rep = run_invariance_suite(cfg);
      for (const auto& c : rep.checks)
        std::cout << (c.pass ? "pass " : "FAIL ") << c.name << " = "
                  << c.value << " (allowed [" << c.lo << ", " << c.hi
                  << "])\n";
      return rep.all_pass() ? 0 : 1;
    }
    if (*ks)
      return cmd_stats_ks(ks_input, ks_ref, ks_mean, ks_var, ks_shape,
                          ks_rate, ks_threshold);
    if (*table) {
      const DistTable& t =
          table_which == "tw-goe-diff" ? tw_goe_diff_table() : tw_goe_table();
      t.write_csv(table_out,
                  {"reference CDF exported by kpz-shock-lab",
                   "table: " + table_which});
      std::cout << "wrote " << table_out << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
