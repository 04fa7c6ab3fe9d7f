#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "kpzlab/field.hpp"
#include "kpzlab/halfline.hpp"
#include "kpzlab/rng.hpp"
#include "kpzlab/solver.hpp"
#include "kpzlab/stats.hpp"

using namespace kpzlab;

namespace {

double heat_g(double t, double z) {
  return std::exp(-z * z / (2.0 * t)) / std::sqrt(2.0 * M_PI * t);
}

// Fine quadrature of the killed propagator applied to exp(theta*y).
double killed_quad(double t, double x, double theta) {
  const double dy = 0.001;
  const double top = x + std::fabs(theta) * t + 12.0 * std::sqrt(t) + 5.0;
  double sum = 0.0;
  for (double y = 0.5 * dy; y < top; y += dy)
    sum += dirichlet_heat_kernel(t, x, y) * std::exp(theta * y) * dy;
  return sum;
}

}  // namespace

TEST_CASE("killed propagator: boundary zeros, symmetry, known value") {
  CHECK(dirichlet_heat_kernel(1.0, 0.0, 1.0) == 0.0);
  CHECK(dirichlet_heat_kernel(1.0, 1.0, 0.0) == 0.0);
  CHECK(dirichlet_heat_kernel(0.7, 0.8, 1.3) ==
        doctest::Approx(dirichlet_heat_kernel(0.7, 1.3, 0.8)).epsilon(1e-14));
  CHECK(dirichlet_heat_kernel(1.0, 1.0, 1.0) ==
        doctest::Approx((1.0 - std::exp(-2.0)) / std::sqrt(2.0 * M_PI))
            .epsilon(1e-12));
  CHECK(dirichlet_heat_kernel(1.0, 1.0, 2.0) ==
        doctest::Approx(heat_g(1.0, 1.0) - heat_g(1.0, 3.0)).epsilon(1e-12));
}

TEST_CASE("killed mass equals the reflection-principle survival") {
  // integral of the kernel over y > 0 is P(BM from x stays positive) =
  // erf(x / sqrt(2 t)).
  const double t = 0.5, x = 1.0;
  const double dy = 0.002;
  double mass = 0.0;
  for (double y = 0.5 * dy; y < 10.0; y += dy)
    mass += dirichlet_heat_kernel(t, x, y) * dy;
  CHECK(mass == doctest::Approx(std::erf(x / std::sqrt(2.0 * t))).epsilon(1e-6));
}

TEST_CASE("deterministic wall run matches the killed-kernel quadrature") {
  const double theta = 0.5, t = 0.5;
  const GridSpec grid = make_grid(0.0, 6.0, 0.025);
  REQUIRE(grid.x_min == 0.0);
  REQUIRE(grid.origin_index == 0);
  SchemeConfig cfg;
  cfg.zero_noise = true;
  const FieldState h = evolve_halfline(
      theta, +1, grid, StreamKey{21, 0, NoisePurpose::HalfLine}, t, cfg);
  CHECK(h.h[0] == -std::numeric_limits<double>::infinity());
  for (double x : {0.5, 1.0, 1.5, 2.0}) {
    const int64_t i = std::llround(x / grid.dx);
    const double num = std::exp(h.h[static_cast<size_t>(i)]);
    CHECK(std::fabs(num - killed_quad(t, x, theta)) < 1e-4);
  }
}

TEST_CASE("mirrored side reproduces the right side without noise") {
  const double theta = 0.5, t = 0.24;
  const GridSpec right = make_grid(0.0, 4.0, 0.1);
  GridSpec left = right;
  left.x_min = -right.x_max;
  left.x_max = 0.0;
  left.origin_index = left.n - 1;
  left.validate();
  SchemeConfig cfg;
  cfg.zero_noise = true;
  const StreamKey key{22, 0, NoisePurpose::HalfLine};
  const FieldState hr = evolve_halfline(theta, +1, right, key, t, cfg);
  const FieldState hl = evolve_halfline(theta, -1, left, key, t, cfg);
  for (int64_t i = 1; i < right.n; ++i)
    CHECK(hl.h[static_cast<size_t>(left.n - 1 - i)] ==
          doctest::Approx(hr.h[static_cast<size_t>(i)]).epsilon(1e-12));
}

TEST_CASE("closed-form survival ratio: anchors, mirror, monotonicity") {
  CHECK(zero_noise_restriction_ratio(1.0, 0.0, 0.5) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(zero_noise_restriction_ratio(1.0, 50.0, 0.5) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(zero_noise_restriction_ratio(2.0, -1.3, 0.5) ==
        doctest::Approx(zero_noise_restriction_ratio(2.0, 1.3, 0.5))
            .epsilon(1e-14));
  double prev = 0.0;
  for (double x = 0.0; x <= 5.0; x += 0.25) {
    const double r = zero_noise_restriction_ratio(0.5, x, 0.5);
    CHECK(r >= prev - 1e-14);
    CHECK(r <= 1.0 + 1e-14);
    prev = r;
  }
  // Independent route: killed quadrature over the analytic full-line value
  // exp(theta x + theta^2 t / 2).
  for (double x : {0.5, 1.0, 2.0}) {
    const double t = 0.5, theta = 0.5;
    const double full = std::exp(theta * x + theta * theta * t / 2.0);
    CHECK(std::fabs(killed_quad(t, x, theta) / full -
                    zero_noise_restriction_ratio(t, x, theta)) < 1e-6);
  }
}

TEST_CASE("discrete ratio under shared noise stays a probability") {
  const double theta = 0.5, t = 0.24;
  const GridSpec half = make_grid(0.0, 4.0, 0.1);
  const GridSpec full = make_grid(4.0, 4.0, 0.1);
  for (uint32_t r = 0; r < 5; ++r) {
    const StreamKey key{23, r, NoisePurpose::HalfLine};
    SchemeConfig cfg;
    const FieldState h = evolve_halfline(theta, +1, half, key, t, cfg);
    FieldState f;
    f.grid = full;
    f.h.resize(static_cast<size_t>(full.n));
    for (int64_t i = 0; i < full.n; ++i)
      f.h[static_cast<size_t>(i)] = theta * full.x_at(i);
    f.slope_left = f.slope_right = theta;
    const std::vector<FieldState> evolved =
        evolve_field(f, key, t, [t] {
          SchemeConfig c;
          c.record_times = {t};
          return c;
        }());
    for (double x : {0.5, 1.0, 2.0}) {
      const double ratio = restriction_ratio(h, evolved.back(), x);
      CHECK(ratio >= 0.0);
      CHECK(ratio <= 1.0 + 1e-6);
    }
  }
}
