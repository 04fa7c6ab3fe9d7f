#include "kpzlab/halfline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "engine.hpp"

namespace kpzlab {

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

double dirichlet_heat_kernel(double t, double x, double y) {
  if (t <= 0.0)
    throw std::invalid_argument("dirichlet_heat_kernel: t must be > 0");
  if (x < 0.0 || y < 0.0) return 0.0;
  const double c = 1.0 / std::sqrt(2.0 * M_PI * t);
  const double dm = x - y;
  const double dp = x + y;
  return c * (std::exp(-dm * dm / (2.0 * t)) - std::exp(-dp * dp / (2.0 * t)));
}

FieldState evolve_halfline(double theta, int sign, const GridSpec& grid,
                           const StreamKey& key, double t_end,
                           const SchemeConfig& cfg) {
  grid.validate();
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("evolve_halfline: sign must be +1 or -1");
  const bool mirrored = sign == -1;
  if (!mirrored && grid.origin_index != 0)
    throw std::invalid_argument(
        "evolve_halfline: sign +1 needs the wall at the first cell (x_min=0)");
  if (mirrored && grid.origin_index != grid.n - 1)
    throw std::invalid_argument(
        "evolve_halfline: sign -1 needs the wall at the last cell (x_max=0)");
  if (t_end < 0.0)
    throw std::invalid_argument("evolve_halfline: t_end must be >= 0");

  const double dt = grid.dt;
  const double dx = grid.dx;
  const double r = dt / (2.0 * dx * dx);
  const double sigma = std::sqrt(dt / dx);
  const int64_t total = std::llround(t_end / dt);
  if (std::fabs(static_cast<double>(total) * dt - t_end) > 1e-9 * dt)
    throw std::invalid_argument(
        "evolve_halfline: t_end is not a multiple of dt");

  // Internal layout: index 0 is the wall, index i sits at distance i*dx.
  const size_t n = static_cast<size_t>(grid.n);
  std::vector<double> h0(n);
  for (size_t i = 0; i < n; ++i) h0[i] = theta * static_cast<double>(i) * dx;
  detail::LinearField lf =
      detail::LinearField::from_height(h0, dx, 0.0, theta, /*wall_left=*/true);

  // Global noise cells for internal index i: +i on the right side, -i on the
  // left; make_noise_slice wants an ascending range, so the mirrored side
  // fetches [-(n-1), 0] and reverses.
  const int64_t cell_begin = mirrored ? -(grid.n - 1) : 0;
  std::vector<double> factors(n);
  std::vector<double> scratch;
  const double half_var = 0.5 * sigma * sigma;
  for (int64_t s = 0; s < total; ++s) {
    detail::heat_step(lf, r, scratch);
    if (!cfg.zero_noise) {
      NoiseSlice slice = make_noise_slice(key, s, cell_begin, grid.n);
      if (mirrored) std::reverse(slice.values.begin(), slice.values.end());
      if (cfg.scheme == Scheme::SplitExponential) {
        for (size_t i = 1; i < n; ++i)
          lf.u[i] *= std::exp(sigma * slice.values[i] - half_var);
      } else {
        for (size_t i = 1; i < n; ++i) {
          lf.u[i] *= 1.0 + sigma * slice.values[i];
          if (!(lf.u[i] > 0.0))
            throw std::runtime_error(
                "evolve_halfline: Euler scheme lost positivity");
        }
      }
    }
    if ((s + 1) % detail::kRenormInterval == 0) lf.renormalize();
  }
  lf.renormalize();

  FieldState out;
  out.grid = grid;
  out.t = t_end;
  std::vector<double> h;
  lf.to_height(&h);
  h[0] = -std::numeric_limits<double>::infinity();
  if (mirrored) {
    std::reverse(h.begin(), h.end());
    out.slope_left = -theta;
    out.slope_right = 0.0;
  } else {
    out.slope_left = 0.0;
    out.slope_right = theta;
  }
  out.h = std::move(h);
  return out;
}

double restriction_ratio(const FieldState& phi_half,
                         const FieldState& full_state, double x) {
  const double log_full = eval_at(full_state, x);
  if (!std::isfinite(log_full))
    throw std::runtime_error("restriction_ratio: full-line phi not positive");
  const double log_half = eval_at(phi_half, x);
  if (log_half == -std::numeric_limits<double>::infinity()) return 0.0;
  return std::exp(log_half - log_full);
}

double zero_noise_restriction_ratio(double t, double x, double theta) {
  if (t <= 0.0)
    throw std::invalid_argument(
        "zero_noise_restriction_ratio: t must be > 0");
  const double ax = std::fabs(x);
  const double rt = std::sqrt(t);
  return normal_cdf((ax + theta * t) / rt) -
         std::exp(-2.0 * theta * ax) * normal_cdf((theta * t - ax) / rt);
}

}  // namespace kpzlab
