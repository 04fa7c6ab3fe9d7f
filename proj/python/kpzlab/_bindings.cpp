// Python bindings for the coupled KPZ / stochastic-heat laboratory.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kpzlab/experiments.hpp"
#include "kpzlab/field.hpp"
#include "kpzlab/halfline.hpp"
#include "kpzlab/rng.hpp"
#include "kpzlab/samplers.hpp"
#include "kpzlab/shock.hpp"
#include "kpzlab/solver.hpp"
#include "kpzlab/stats.hpp"

namespace py = pybind11;
using namespace kpzlab;

PYBIND11_MODULE(_kpzlab, m) {
  m.doc() = "coupled KPZ / stochastic heat equation Monte Carlo laboratory";

  py::enum_<NoisePurpose>(m, "NoisePurpose")
      .value("InitialData", NoisePurpose::InitialData)
      .value("Dynamics", NoisePurpose::Dynamics)
      .value("HalfLine", NoisePurpose::HalfLine);

  py::class_<StreamKey>(m, "StreamKey")
      .def(py::init([](uint64_t seed, uint32_t replica, NoisePurpose purpose) {
             return StreamKey{seed, replica, purpose};
           }),
           py::arg("seed"), py::arg("replica"), py::arg("purpose"))
      .def_readwrite("master_seed", &StreamKey::master_seed)
      .def_readwrite("replica_id", &StreamKey::replica_id)
      .def_readwrite("purpose", &StreamKey::purpose);

  py::class_<NoiseStream>(m, "NoiseStream")
      .def(py::init<StreamKey>(), py::arg("key"))
      .def("next", &NoiseStream::next)
      .def("gaussian_slice", &NoiseStream::gaussian_slice, py::arg("count"));

  py::class_<GridSpec>(m, "GridSpec")
      .def_readonly("x_min", &GridSpec::x_min)
      .def_readonly("x_max", &GridSpec::x_max)
      .def_readonly("dx", &GridSpec::dx)
      .def_readonly("n", &GridSpec::n)
      .def_readonly("dt", &GridSpec::dt)
      .def_readonly("origin_index", &GridSpec::origin_index)
      .def("x_at", &GridSpec::x_at)
      .def("validate", &GridSpec::validate);
  m.def("make_grid", &make_grid, py::arg("left"), py::arg("right"),
        py::arg("dx"), py::arg("dt_factor") = 0.4);
  m.def("default_half_width", &default_half_width, py::arg("theta"),
        py::arg("t_end"));

  py::class_<PathSample>(m, "PathSample")
      .def_readonly("grid", &PathSample::grid)
      .def_readonly("values", &PathSample::values)
      .def_readonly("pinned", &PathSample::pinned);

  py::class_<WeightedPairSample>(m, "WeightedPairSample")
      .def_readonly("f_minus", &WeightedPairSample::f_minus)
      .def_readonly("f_plus", &WeightedPairSample::f_plus)
      .def_readonly("weight", &WeightedPairSample::weight)
      .def_readonly("theta", &WeightedPairSample::theta)
      .def_readonly("gap_derivative_at_zero",
                    &WeightedPairSample::gap_derivative_at_zero)
      .def_readonly("tail_bound", &WeightedPairSample::tail_bound);

  m.def("sample_bm_with_drift", &sample_bm_with_drift, py::arg("stream"),
        py::arg("grid"), py::arg("theta"));
  m.def("sample_nu_theta", &sample_nu_theta, py::arg("stream"),
        py::arg("grid"), py::arg("theta"), py::arg("tail_m") = -1.0);
  m.def("apply_D", &apply_D, py::arg("g_minus"), py::arg("g_plus"),
        py::arg("theta"), py::arg("tail_m") = -1.0);
  m.def("pair_derivative_at_zero", &pair_derivative_at_zero, py::arg("pair"));
  m.def("hat_nu_weight", &hat_nu_weight, py::arg("pair"));
  m.def("v_combine", &v_combine, py::arg("f_minus"), py::arg("f_plus"));
  m.def("a_split", &a_split, py::arg("f_v"), py::arg("theta"));
  m.def("flat_pair", &flat_pair, py::arg("theta"), py::arg("grid"));
  m.def("v_abs_profile", &v_abs_profile, py::arg("theta"), py::arg("grid"));
  m.def("to_field", &to_field, py::arg("path"), py::arg("slope_left"),
        py::arg("slope_right"));

  py::class_<FieldState>(m, "FieldState")
      .def(py::init<>())
      .def_readwrite("grid", &FieldState::grid)
      .def_readwrite("h", &FieldState::h)
      .def_readwrite("t", &FieldState::t)
      .def_readwrite("slope_left", &FieldState::slope_left)
      .def_readwrite("slope_right", &FieldState::slope_right)
      .def("validate", &FieldState::validate);
  m.def("recenter", &recenter, py::arg("field"));
  m.def("eval_at", &eval_at, py::arg("field"), py::arg("x"));
  m.def("log_mean_exp", &log_mean_exp, py::arg("a"), py::arg("b"));

  py::class_<CoupledState>(m, "CoupledState")
      .def(py::init<>())
      .def_readwrite("h_minus", &CoupledState::h_minus)
      .def_readwrite("h_plus", &CoupledState::h_plus)
      .def_readwrite("h_v", &CoupledState::h_v)
      .def("t", &CoupledState::t)
      .def("validate", &CoupledState::validate);

  py::enum_<Scheme>(m, "Scheme")
      .value("SplitExponential", Scheme::SplitExponential)
      .value("ExplicitEuler", Scheme::ExplicitEuler);

  py::class_<SchemeConfig>(m, "SchemeConfig")
      .def(py::init<>())
      .def_readwrite("scheme", &SchemeConfig::scheme)
      .def_readwrite("zero_noise", &SchemeConfig::zero_noise)
      .def_readwrite("record_times", &SchemeConfig::record_times);

  py::class_<CoupledTrajectory>(m, "CoupledTrajectory")
      .def_readonly("snapshots", &CoupledTrajectory::snapshots);

  m.def("evolve_coupled", &evolve_coupled, py::arg("initial"), py::arg("key"),
        py::arg("t_end"), py::arg("config"));
  m.def("evolve_field", &evolve_field, py::arg("initial"), py::arg("key"),
        py::arg("t_end"), py::arg("config"));

  py::class_<ShockRecord>(m, "ShockRecord")
      .def_readonly("t", &ShockRecord::t)
      .def_readonly("b", &ShockRecord::b)
      .def_readonly("j0", &ShockRecord::j0)
      .def_readonly("unique", &ShockRecord::unique)
      .def_readonly("violations", &ShockRecord::violations);
  m.def("find_shock", &find_shock, py::arg("state"));
  m.def("m_statistic", &m_statistic, py::arg("state"), py::arg("theta"),
        py::arg("eps"));
  m.def("shift_to_shock", &shift_to_shock, py::arg("state"));

  m.def("dirichlet_heat_kernel", &dirichlet_heat_kernel, py::arg("t"),
        py::arg("x"), py::arg("y"));
  m.def("evolve_halfline", &evolve_halfline, py::arg("theta"), py::arg("sign"),
        py::arg("grid"), py::arg("key"), py::arg("t_end"), py::arg("config"));
  m.def("restriction_ratio", &restriction_ratio, py::arg("phi_half"),
        py::arg("full_state"), py::arg("x"));
  m.def("zero_noise_restriction_ratio", &zero_noise_restriction_ratio,
        py::arg("t"), py::arg("x"), py::arg("theta"));

  py::class_<DistTable>(m, "DistTable")
      .def(py::init<>())
      .def_readwrite("xs", &DistTable::xs)
      .def_readwrite("cdf", &DistTable::cdf)
      .def("validate", &DistTable::validate)
      .def("cdf_at", &DistTable::cdf_at)
      .def("quantile", &DistTable::quantile)
      .def("mean", &DistTable::mean)
      .def("variance", &DistTable::variance)
      .def("write_csv", &DistTable::write_csv, py::arg("path"),
           py::arg("comments") = std::vector<std::string>{})
      .def_static("read_csv", &DistTable::read_csv, py::arg("path"));

  m.def("tw_goe_table", &tw_goe_table, py::return_value_policy::reference);
  m.def("tw_goe_diff_table", &tw_goe_diff_table,
        py::return_value_policy::reference);
  m.def("ks_distance_table",
        [](std::vector<double> samples, const DistTable& ref) {
          return ks_distance(std::move(samples), ref);
        },
        py::arg("samples"), py::arg("ref"));
  m.def("ks_distance_fn", &ks_distance_fn, py::arg("samples"),
        py::arg("ref_cdf"));
  m.def("ks_two_sample", &ks_two_sample, py::arg("a"), py::arg("b"));
  m.def("gaussian_cdf", &gaussian_cdf, py::arg("x"), py::arg("mean"),
        py::arg("var"));
  m.def("gamma_cdf", &gamma_cdf, py::arg("x"), py::arg("shape"),
        py::arg("rate"));
  m.def("iqr", &iqr, py::arg("values"));
  m.def("median", &median, py::arg("values"));
  m.def("sample_variance", &sample_variance, py::arg("values"));

  py::class_<ScalingFit>(m, "ScalingFit")
      .def_readonly("exponent", &ScalingFit::exponent)
      .def_readonly("intercept", &ScalingFit::intercept)
      .def_readonly("r2", &ScalingFit::r2);
  m.def("fit_scaling", &fit_scaling, py::arg("pairs"));

  py::enum_<Scenario>(m, "Scenario")
      .value("Stationary", Scenario::Stationary)
      .value("Flat", Scenario::Flat)
      .value("Tilted", Scenario::Tilted)
      .value("ShockFrame", Scenario::ShockFrame)
      .value("Shear", Scenario::Shear)
      .value("VMixture", Scenario::VMixture)
      .value("HalflineRatio", Scenario::HalflineRatio);
  m.def("scenario_name", &scenario_name);
  m.def("scenario_from_name", &scenario_from_name);

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("scenario", &ExperimentConfig::scenario)
      .def_readwrite("theta", &ExperimentConfig::theta)
      .def_readwrite("theta1", &ExperimentConfig::theta1)
      .def_readwrite("theta2", &ExperimentConfig::theta2)
      .def_readwrite("times", &ExperimentConfig::times)
      .def_readwrite("dx", &ExperimentConfig::dx)
      .def_readwrite("dt_factor", &ExperimentConfig::dt_factor)
      .def_readwrite("replicas", &ExperimentConfig::replicas)
      .def_readwrite("seed", &ExperimentConfig::seed)
      .def_readwrite("output_dir", &ExperimentConfig::output_dir)
      .def_readwrite("domain_half_width", &ExperimentConfig::domain_half_width)
      .def_readwrite("workers", &ExperimentConfig::workers)
      .def("validate", &ExperimentConfig::validate)
      .def("to_json", &ExperimentConfig::to_json)
      .def_static("from_json_file", &ExperimentConfig::from_json_file);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("value", &CheckResult::value)
      .def_readonly("lo", &CheckResult::lo)
      .def_readonly("hi", &CheckResult::hi)
      .def_readonly("passed", &CheckResult::pass);

  py::class_<TimeSummary>(m, "TimeSummary")
      .def_readonly("t", &TimeSummary::t)
      .def_readonly("mean_j0", &TimeSummary::mean_j0)
      .def_readonly("var_j0", &TimeSummary::var_j0)
      .def_readonly("iqr_j0", &TimeSummary::iqr_j0)
      .def_readonly("mean_b", &TimeSummary::mean_b)
      .def_readonly("var_b", &TimeSummary::var_b)
      .def_readonly("iqr_b", &TimeSummary::iqr_b)
      .def_readonly("unique_rate", &TimeSummary::unique_rate);

  py::class_<EnsembleResult>(m, "EnsembleResult")
      .def_readonly("config", &EnsembleResult::config)
      .def_readonly("target", &EnsembleResult::target)
      .def_readonly("records", &EnsembleResult::records)
      .def_readonly("weights", &EnsembleResult::weights)
      .def_readonly("summaries", &EnsembleResult::summaries)
      .def_readonly("checks", &EnsembleResult::checks)
      .def_readonly("velocity", &EnsembleResult::velocity)
      .def_readonly("extra_columns", &EnsembleResult::extra_columns)
      .def_readonly("extra", &EnsembleResult::extra)
      .def_readonly("notes", &EnsembleResult::notes)
      .def("all_pass", &EnsembleResult::all_pass);

  m.def("run_experiment", &run_experiment, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<InvarianceReport>(m, "InvarianceReport")
      .def_readonly("checks", &InvarianceReport::checks)
      .def("all_pass", &InvarianceReport::all_pass);
  m.def("run_invariance_suite", &run_invariance_suite, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
}
