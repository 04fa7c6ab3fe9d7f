#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "kpzlab/field.hpp"
#include "kpzlab/rng.hpp"
#include "kpzlab/samplers.hpp"
#include "kpzlab/solver.hpp"

using namespace kpzlab;

namespace {

FieldState flat_field(const GridSpec& grid, double slope) {
  FieldState f;
  f.grid = grid;
  f.h.resize(static_cast<size_t>(grid.n));
  for (int64_t i = 0; i < grid.n; ++i)
    f.h[static_cast<size_t>(i)] = slope * grid.x_at(i);
  f.slope_left = f.slope_right = slope;
  return f;
}

SchemeConfig quiet(std::vector<double> record = {}) {
  SchemeConfig cfg;
  cfg.zero_noise = true;
  cfg.record_times = std::move(record);
  return cfg;
}

}  // namespace

TEST_CASE("zero-noise evolution fixes constants and shifts ramps") {
  const GridSpec grid = make_grid(4.0, 4.0, 0.1);
  const FieldState c = flat_field(grid, 0.0);
  const std::vector<FieldState> out =
      evolve_field(c, StreamKey{1, 0, NoisePurpose::Dynamics}, 0.5, quiet());
  REQUIRE(out.size() == 1);
  for (double v : out.back().h) CHECK(std::fabs(v) < 1e-12);

  // exp(a x) is an eigenfunction of the discrete heat stencil, so a ramp
  // gains a uniform offset close to a^2 t / 2.
  const double a = 1.5;
  const FieldState ramp = flat_field(grid, a);
  const std::vector<FieldState> r =
      evolve_field(ramp, StreamKey{1, 0, NoisePurpose::Dynamics}, 0.5, quiet());
  const double off0 = r.back().h[0] - ramp.h[0];
  for (int64_t i = 0; i < grid.n; ++i)
    CHECK(r.back().h[static_cast<size_t>(i)] -
              ramp.h[static_cast<size_t>(i)] ==
          doctest::Approx(off0).epsilon(1e-10));
  CHECK(off0 == doctest::Approx(a * a * 0.5 * 0.5).epsilon(2e-3));
}

TEST_CASE("zero-noise evolution matches the Gaussian closed form") {
  // exp(h0) = exp(-x^2) spreads to sqrt(s/(s+t)) exp(-x^2/(2(s+t))) with
  // s = 1/2 under the half-Laplacian heat flow.
  const GridSpec grid = make_grid(4.0, 4.0, 0.05);
  FieldState f;
  f.grid = grid;
  f.h.resize(static_cast<size_t>(grid.n));
  for (int64_t i = 0; i < grid.n; ++i) {
    const double x = grid.x_at(i);
    f.h[static_cast<size_t>(i)] = -x * x;
  }
  f.slope_left = 8.0;
  f.slope_right = -8.0;
  const double t = 0.25;
  const std::vector<FieldState> out =
      evolve_field(f, StreamKey{2, 0, NoisePurpose::Dynamics}, t, quiet());
  double sup = 0.0;
  for (int64_t i = 0; i < grid.n; ++i) {
    const double x = grid.x_at(i);
    const double exact =
        std::sqrt(0.5 / (0.5 + t)) * std::exp(-x * x / (2.0 * (0.5 + t)));
    sup = std::max(sup,
                   std::fabs(std::exp(out.back().h[static_cast<size_t>(i)]) -
                             exact));
  }
  CHECK(sup < 1e-4);
}

TEST_CASE("one noisy step has the advertised per-cell law") {
  // From h = 0 the update is log of a mean-one lognormal with
  // sigma^2 = dt/dx per cell.
  const GridSpec grid = make_grid(50000.0, 50000.0, 0.1);
  const FieldState f = flat_field(grid, 0.0);
  SchemeConfig cfg;
  cfg.record_times = {grid.dt};
  const std::vector<FieldState> out =
      evolve_field(f, StreamKey{3, 0, NoisePurpose::Dynamics}, grid.dt, cfg);
  const double sigma2 = grid.dt / grid.dx;
  double mean_u = 0.0, mean_h = 0.0, var_h = 0.0;
  const auto& h = out.back().h;
  for (double v : h) {
    mean_u += std::exp(v);
    mean_h += v;
  }
  mean_u /= static_cast<double>(h.size());
  mean_h /= static_cast<double>(h.size());
  for (double v : h) var_h += (v - mean_h) * (v - mean_h);
  var_h /= static_cast<double>(h.size() - 1);
  CHECK(mean_u == doctest::Approx(1.0).epsilon(0.001));
  CHECK(mean_h == doctest::Approx(-0.5 * sigma2).epsilon(0.02));
  CHECK(var_h == doctest::Approx(sigma2).epsilon(0.05));
}

TEST_CASE("fixed seed replays bitwise; resume stays consistent") {
  const GridSpec grid = make_grid(5.0, 5.0, 0.1);
  NoiseStream s(StreamKey{11, 0, NoisePurpose::InitialData});
  WeightedPairSample pair = sample_nu_theta(s, grid, 1.0);
  CoupledState init;
  init.h_minus = to_field(pair.f_minus, -1.0, -1.0);
  init.h_plus = to_field(pair.f_plus, 1.0, 1.0);

  SchemeConfig cfg;
  cfg.record_times = {0.5, 1.0};
  const StreamKey key{11, 0, NoisePurpose::Dynamics};
  const CoupledTrajectory a = evolve_coupled(init, key, 1.0, cfg);
  const CoupledTrajectory b = evolve_coupled(init, key, 1.0, cfg);
  REQUIRE(a.snapshots.size() == 2);
  for (size_t k = 0; k < a.snapshots[1].h_minus.h.size(); ++k) {
    CHECK(a.snapshots[1].h_minus.h[k] == b.snapshots[1].h_minus.h[k]);
    CHECK(a.snapshots[1].h_plus.h[k] == b.snapshots[1].h_plus.h[k]);
  }

  // Restart from the recorded midpoint: noise is addressed by absolute
  // step, so the law of the second half is the same run.
  SchemeConfig tail_cfg;
  tail_cfg.record_times = {1.0};
  const CoupledTrajectory c =
      evolve_coupled(a.snapshots[0], key, 1.0, tail_cfg);
  for (size_t k = 0; k < a.snapshots[1].h_minus.h.size(); ++k)
    CHECK(std::fabs(a.snapshots[1].h_minus.h[k] -
                    c.snapshots[0].h_minus.h[k]) < 1e-9);
}

TEST_CASE("identical members stay bitwise identical under shared noise") {
  const GridSpec grid = make_grid(3.0, 3.0, 0.1);
  NoiseStream s(StreamKey{12, 0, NoisePurpose::InitialData});
  const PathSample p = sample_bm_with_drift(s, grid, 0.0);
  CoupledState init;
  init.h_minus = to_field(p, 0.0, 0.0);
  init.h_plus = to_field(p, 0.0, 0.0);
  SchemeConfig cfg;
  cfg.record_times = {0.5};
  const CoupledTrajectory out =
      evolve_coupled(init, StreamKey{12, 0, NoisePurpose::Dynamics}, 0.5, cfg);
  for (size_t k = 0; k < out.snapshots[0].h_minus.h.size(); ++k)
    CHECK(out.snapshots[0].h_minus.h[k] == out.snapshots[0].h_plus.h[k]);
}

TEST_CASE("the combined member stays the log-mean-exp of the pair") {
  const GridSpec grid = make_grid(5.0, 5.0, 0.1);
  auto [fm, fp] = flat_pair(1.0, grid);
  CoupledState init;
  init.h_minus = to_field(fm, -1.0, -1.0);
  init.h_plus = to_field(fp, 1.0, 1.0);
  init.h_v = to_field(v_combine(fm, fp), -1.0, 1.0);
  SchemeConfig cfg;
  cfg.record_times = {1.0};
  const CoupledTrajectory out =
      evolve_coupled(init, StreamKey{13, 0, NoisePurpose::Dynamics}, 1.0, cfg);
  const CoupledState& st = out.snapshots[0];
  REQUIRE(st.h_v.has_value());
  for (size_t k = 0; k < st.h_minus.h.size(); ++k)
    CHECK(std::fabs(st.h_v->h[k] -
                    log_mean_exp(st.h_minus.h[k], st.h_plus.h[k])) < 1e-8);
}

TEST_CASE("the evolved gap stays essentially monotone") {
  const GridSpec grid = make_grid(5.0, 5.0, 0.1);
  int64_t violations = 0, cells = 0;
  for (uint32_t r = 0; r < 5; ++r) {
    NoiseStream s(StreamKey{14, r, NoisePurpose::InitialData});
    WeightedPairSample pair = sample_nu_theta(s, grid, 1.0);
    CoupledState init;
    init.h_minus = to_field(pair.f_minus, -1.0, -1.0);
    init.h_plus = to_field(pair.f_plus, 1.0, 1.0);
    SchemeConfig cfg;
    cfg.record_times = {1.0};
    const CoupledTrajectory out = evolve_coupled(
        init, StreamKey{14, r, NoisePurpose::Dynamics}, 1.0, cfg);
    const SpaceReport rep = validate_space_pair(out.snapshots[0].h_minus,
                                                out.snapshots[0].h_plus,
                                                SpaceKind::Y, 1.0);
    violations += rep.monotonicity_violations;
    cells += rep.gap_cells;
  }
  CHECK(static_cast<double>(violations) < 0.005 * static_cast<double>(cells));
}

TEST_CASE("explicit Euler agrees without noise and throws on blowup") {
  const GridSpec grid = make_grid(4.0, 4.0, 0.1);
  const FieldState f = flat_field(grid, 1.0);
  SchemeConfig a = quiet(), b = quiet();
  b.scheme = Scheme::ExplicitEuler;
  const auto ra =
      evolve_field(f, StreamKey{15, 0, NoisePurpose::Dynamics}, 0.2, a);
  const auto rb =
      evolve_field(f, StreamKey{15, 0, NoisePurpose::Dynamics}, 0.2, b);
  for (size_t k = 0; k < ra.back().h.size(); ++k)
    CHECK(ra.back().h[k] == doctest::Approx(rb.back().h[k]).epsilon(1e-12));

  // Coarse cells make the one-step factor 1 + xi sqrt(dt/dx) go negative.
  const GridSpec coarse = make_grid(500.0, 500.0, 10.0);
  SchemeConfig noisy;
  noisy.scheme = Scheme::ExplicitEuler;
  CHECK_THROWS(evolve_field(flat_field(coarse, 0.0),
                            StreamKey{15, 1, NoisePurpose::Dynamics},
                            coarse.dt, noisy));
}

TEST_CASE("shear self-test is trivial at zero tilt") {
  const GridSpec grid = make_grid(4.0, 4.0, 0.1);
  SchemeConfig cfg;
  const ShearTwinReport rep = shear_twin_check(
      0.0, StreamKey{16, 0, NoisePurpose::HalfLine}, 0.5, cfg, grid, 60);
  CHECK(rep.replicas == 60);
  CHECK(rep.ks < 0.3);
  CHECK(std::fabs(rep.mean_shift) < 3.0 * rep.mean_shift_stderr + 0.05);
}
