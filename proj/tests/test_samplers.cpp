#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"
#include "kpzlab/field.hpp"
#include "kpzlab/rng.hpp"
#include "kpzlab/samplers.hpp"
#include "kpzlab/stats.hpp"

using namespace kpzlab;

namespace {

PathSample zeros_on(const GridSpec& grid) {
  PathSample p;
  p.grid = grid;
  p.values.assign(static_cast<size_t>(grid.n), 0.0);
  return p;
}

NoiseStream stream_for(uint32_t replica) {
  return NoiseStream(StreamKey{777, replica, NoisePurpose::InitialData});
}

}  // namespace

TEST_CASE("bm with drift: pinned, unit increment variance, drift slope") {
  const GridSpec grid = make_grid(2.0, 10.0, 0.1);
  std::vector<double> unit_inc;
  double slope_sum = 0.0;
  const int n = 5000;
  for (int i = 0; i < n; ++i) {
    NoiseStream s = stream_for(static_cast<uint32_t>(i));
    PathSample p = sample_bm_with_drift(s, grid, 0.5);
    CHECK(p.values[static_cast<size_t>(grid.origin_index)] == 0.0);
    const FieldState f = to_field(p, 0.5, 0.5);
    unit_inc.push_back(eval_at(f, 1.0) - eval_at(f, 0.0) - 0.5);
    slope_sum += (eval_at(f, 10.0) - eval_at(f, 0.0)) / 10.0;
  }
  CHECK(sample_variance(unit_inc) == doctest::Approx(1.0).epsilon(0.05));
  CHECK(slope_sum / n == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("exponential integral on zero paths and its tail bound") {
  // On zero paths the integral over (x - M, x) is (1 - e^{-2 theta M}) /
  // (2 theta); for theta = 1/4 the log is log 2 up to the truncation.
  const GridSpec grid = make_grid(45.0, 1.0, 0.05);
  const PathSample z = zeros_on(grid);
  double bound40 = 0.0, bound20 = 0.0;
  const double v40 = s_theta_at(z, z, 0.25, 0.0, 40.0, &bound40);
  CHECK(v40 == doctest::Approx(std::log(2.0)).epsilon(5e-4));
  const double v20 = s_theta_at(z, z, 0.25, 0.0, 20.0, &bound20);
  // Widening the window adds the analytically known tail; the quadrature
  // error cancels between the two windows.
  CHECK(v40 - v20 == doctest::Approx(std::exp(-10.0)).epsilon(1e-3));
  CHECK(v40 - v20 <= 1.1 * bound20);
  CHECK(bound20 == doctest::Approx(std::exp(-10.0)).epsilon(1e-2));
  CHECK(bound40 < 1e-8);
  // Doubling an already-large window changes nothing measurable.
  const double v80 = s_theta_at(z, z, 1.0, 0.0, 40.0);
  const double v40b = s_theta_at(z, z, 1.0, 0.0, 20.0);
  CHECK(std::fabs(v80 - v40b) < 1e-6);
}

TEST_CASE("exponential integral law is stationary in space") {
  const GridSpec grid = make_grid(16.0, 6.0, 0.05);
  std::vector<double> at0, at5;
  for (int i = 0; i < 10000; ++i) {
    NoiseStream s = stream_for(static_cast<uint32_t>(20000 + i));
    const PathSample b1 = sample_bm_with_drift(s, grid, 0.0);
    const PathSample b2 = sample_bm_with_drift(s, grid, 0.0);
    at0.push_back(s_theta_at(b1, b2, 1.0, 0.0, 10.0));
    at5.push_back(s_theta_at(b1, b2, 1.0, 5.0, 10.0));
  }
  CHECK(ks_two_sample(at0, at5) < 0.02);
}

TEST_CASE("coupled invariant sample: pinning, monotone gap, Gamma law") {
  const GridSpec grid = make_grid(2.0, 2.0, 0.05);
  const double theta = 1.0;
  std::vector<double> gamma_samples, inc;
  double wsum = 0.0, w2sum = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    NoiseStream s = stream_for(static_cast<uint32_t>(100000 + i));
    WeightedPairSample pair = sample_nu_theta(s, grid, theta);
    if (i < 100) {
      CHECK(pair.f_minus.values[static_cast<size_t>(grid.origin_index)] == 0.0);
      CHECK(pair.f_plus.values[static_cast<size_t>(grid.origin_index)] == 0.0);
      for (int64_t k = 0; k + 1 < grid.n; ++k) {
        const double g0 = pair.f_plus.at(k) - pair.f_minus.at(k);
        const double g1 = pair.f_plus.at(k + 1) - pair.f_minus.at(k + 1);
        CHECK(g1 > g0 - 1e-9 * grid.dx);
      }
      CHECK(pair.tail_bound < 1e-2);
      CHECK(pair_derivative_at_zero(pair) == pair.gap_derivative_at_zero);
    }
    gamma_samples.push_back(2.0 * theta * hat_nu_weight(pair));
    const FieldState fp = to_field(pair.f_plus, theta, theta);
    inc.push_back(eval_at(fp, 1.0) - eval_at(fp, 0.0));
    const double w = hat_nu_weight(pair);
    wsum += w;
    w2sum += (2.0 * theta * w) * (2.0 * theta * w);
  }
  CHECK(ks_distance(gamma_samples,
                    [](double x, double shape, double rate) {
                      return gamma_cdf(x, shape, rate);
                    },
                    2.0 * theta, 1.0) < 0.02);
  // Unit increments of the second component are N(theta, 1).
  CHECK(ks_distance(inc, gaussian_cdf, theta, 1.0) < 0.02);
  // Tilt weight has mean one; its Gamma(2 theta, 1) second moment is
  // 2 theta (2 theta + 1).
  CHECK(wsum / n == doctest::Approx(1.0).epsilon(0.02));
  CHECK(w2sum / n ==
        doctest::Approx(2.0 * theta * (2.0 * theta + 1.0)).epsilon(0.03));
}

TEST_CASE("tilt weight plumbing") {
  WeightedPairSample p;
  p.theta = 0.5;
  p.gap_derivative_at_zero = 1.0;
  CHECK(hat_nu_weight(p) == 1.0);
  p.gap_derivative_at_zero = 0.0;
  CHECK_THROWS(pair_derivative_at_zero(p));
}

TEST_CASE("smoothing map fixes pairs whose gap is already linear") {
  const GridSpec grid = make_grid(45.0, 1.0, 0.05);
  PathSample gm = zeros_on(grid), gp = zeros_on(grid);
  for (int64_t k = 0; k < grid.n; ++k) {
    gm.values[static_cast<size_t>(k)] = -0.5 * grid.x_at(k);
    gp.values[static_cast<size_t>(k)] = 0.5 * grid.x_at(k);
  }
  auto [fm, fp] = apply_D(gm, gp, 0.5);
  for (int64_t k = 0; k < grid.n; ++k) {
    CHECK(std::fabs(fm.at(k) - gm.at(k)) < 1e-12);
    CHECK(std::fabs(fp.at(k) - gp.at(k)) < 1e-6);
  }
}

TEST_CASE("smoothing map agrees with the direct integral route") {
  const double theta = 1.0;
  const GridSpec grid = make_grid(14.0, 2.0, 0.05);
  for (int i = 0; i < 20; ++i) {
    NoiseStream s = stream_for(static_cast<uint32_t>(300000 + i));
    const PathSample b1 = sample_bm_with_drift(s, grid, 0.0);
    const PathSample b2 = sample_bm_with_drift(s, grid, 0.0);
    PathSample gm = b1, gp = b2;
    for (int64_t k = 0; k < grid.n; ++k) {
      gm.values[static_cast<size_t>(k)] -= theta * grid.x_at(k);
      gp.values[static_cast<size_t>(k)] += theta * grid.x_at(k);
    }
    auto [fm, fp] = apply_D(gm, gp, theta);
    const double s0 = s_theta_at(b1, b2, theta, 0.0, 10.0);
    for (double x : {0.0, 1.0, 2.0}) {
      const int64_t idx = grid.origin_index + std::llround(x / grid.dx);
      const double direct = gp.at(idx) - gp.at(grid.origin_index) +
                            s_theta_at(b1, b2, theta, x, 10.0) - s0;
      CHECK(std::fabs(fp.at(idx) - direct) < 2e-4);
    }
    for (int64_t k = 0; k + 1 < grid.n; ++k)
      CHECK(fp.at(k + 1) - fm.at(k + 1) >= fp.at(k) - fm.at(k) - 1e-12);
  }
}

TEST_CASE("smoothing map commutes with recentering shifts") {
  const double theta = 1.0;
  const GridSpec grid = make_grid(16.0, 3.0, 0.05);
  NoiseStream s = stream_for(400000);
  const PathSample b1 = sample_bm_with_drift(s, grid, 0.0);
  const PathSample b2 = sample_bm_with_drift(s, grid, 0.0);
  PathSample gm = b1, gp = b2;
  for (int64_t k = 0; k < grid.n; ++k) {
    gm.values[static_cast<size_t>(k)] -= theta * grid.x_at(k);
    gp.values[static_cast<size_t>(k)] += theta * grid.x_at(k);
  }
  auto [fm, fp] = apply_D(gm, gp, theta);

  // Drop the lowest sh cells and re-pin at the node sh cells above the old
  // origin, i.e. shift by sh*dx, then apply the map on the smaller grid.
  const int64_t sh = 20;
  const int64_t o = grid.origin_index;
  GridSpec g2;
  g2.dx = grid.dx;
  g2.dt = grid.dt;
  g2.n = grid.n - sh;
  g2.origin_index = o;
  g2.x_min = -static_cast<double>(o) * g2.dx;
  g2.x_max = static_cast<double>(g2.n - 1 - o) * g2.dx;
  g2.validate();
  PathSample gm2, gp2;
  gm2.grid = gp2.grid = g2;
  gm2.values.resize(static_cast<size_t>(g2.n));
  gp2.values.resize(static_cast<size_t>(g2.n));
  for (int64_t k = 0; k < g2.n; ++k) {
    gm2.values[static_cast<size_t>(k)] = gm.at(k + sh) - gm.at(o + sh);
    gp2.values[static_cast<size_t>(k)] = gp.at(k + sh) - gp.at(o + sh);
  }
  auto [fm2, fp2] = apply_D(gm2, gp2, theta);
  // Away from the truncated bottom the two orders agree.
  for (int64_t k = o; k < g2.n; ++k) {
    CHECK(std::fabs(fm2.at(k) - (fm.at(k + sh) - fm.at(o + sh))) < 1e-9);
    CHECK(std::fabs(fp2.at(k) - (fp.at(k + sh) - fp.at(o + sh))) < 1e-6);
  }
}

TEST_CASE("pointwise combine: basics and the log-2 sandwich") {
  const GridSpec grid = make_grid(5.0, 5.0, 0.1);
  auto [fm, fp] = flat_pair(1.0, grid);
  const PathSample same = v_combine(fm, fm);
  for (int64_t k = 0; k < grid.n; ++k)
    CHECK(same.at(k) == doctest::Approx(fm.at(k)).epsilon(1e-14));
  const PathSample v = v_combine(fm, fp);
  CHECK(std::fabs(v.at(grid.origin_index)) < 1e-14);
  for (int64_t k = 0; k < grid.n; ++k) {
    const double x = grid.x_at(k);
    const double expect =
        std::fabs(x) + std::log((1.0 + std::exp(-2.0 * std::fabs(x))) / 2.0);
    CHECK(v.at(k) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(v.at(k) <= std::fabs(x) + 1e-14);
  }
  // With a nondecreasing gap vanishing at 0, increments of the combined
  // profile track increments of the larger member to within log 2.
  const GridSpec sgrid = make_grid(2.0, 3.0, 0.05);
  for (int i = 0; i < 100; ++i) {
    NoiseStream st = stream_for(static_cast<uint32_t>(500000 + i));
    WeightedPairSample pair = sample_nu_theta(st, sgrid, 1.0);
    const PathSample vv = v_combine(pair.f_minus, pair.f_plus);
    for (int64_t k = sgrid.origin_index; k < sgrid.n; ++k) {
      const double dv = vv.at(k) - vv.at(sgrid.origin_index);
      const double dp = pair.f_plus.at(k) - pair.f_plus.at(sgrid.origin_index);
      CHECK(std::fabs(dv - dp) <= std::log(2.0) + 1e-12);
    }
  }
}

TEST_CASE("splitting a V profile inverts exactly and fixes the gap") {
  const GridSpec grid = make_grid(6.0, 6.0, 0.05);
  const PathSample v = v_abs_profile(0.7, grid);
  auto [fm, fp] = a_split(v, 0.7);
  const PathSample back = v_combine(fm, fp);
  for (int64_t k = 0; k < grid.n; ++k) {
    CHECK(std::fabs(back.at(k) - v.at(k)) < 1e-10);
    CHECK(fp.at(k) - fm.at(k) ==
          doctest::Approx(1.4 * grid.x_at(k)).epsilon(1e-12));
  }
  CHECK(validate_space_pair(to_field(fm, -0.7, -0.7), to_field(fp, 0.7, 0.7),
                            SpaceKind::X, 0.7)
            .pass);
}

TEST_CASE("flat pair is pinned with exact slopes") {
  const GridSpec grid = make_grid(4.0, 4.0, 0.1);
  auto [fm, fp] = flat_pair(2.0, grid);
  CHECK(fm.at(grid.origin_index) == 0.0);
  CHECK(fp.at(grid.origin_index) == 0.0);
  for (int64_t k = 0; k < grid.n; ++k) {
    CHECK(fm.at(k) == -2.0 * grid.x_at(k));
    CHECK(fp.at(k) == 2.0 * grid.x_at(k));
  }
  CHECK(validate_space_pair(to_field(fm, -2, -2), to_field(fp, 2, 2),
                            SpaceKind::X, 2.0)
            .pass);
}
