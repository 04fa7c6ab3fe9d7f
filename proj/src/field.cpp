#include "kpzlab/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kpzlab {

void GridSpec::validate() const {
  if (n < 3) throw std::invalid_argument("GridSpec: n must be >= 3");
  if (dx <= 0.0) throw std::invalid_argument("GridSpec: dx must be > 0");
  if (dt <= 0.0) throw std::invalid_argument("GridSpec: dt must be > 0");
  if (dt > 0.5 * dx * dx + 1e-15)
    throw std::invalid_argument("GridSpec: dt exceeds 0.5*dx^2 stability bound");
  if (origin_index < 0 || origin_index >= n)
    throw std::invalid_argument("GridSpec: origin_index out of range");
  const double x0 = x_at(origin_index);
  if (std::fabs(x0) > 1e-9 * dx)
    throw std::invalid_argument("GridSpec: no grid point at x = 0");
  if (std::fabs((x_max - x_min) - static_cast<double>(n - 1) * dx) > 1e-9 * dx)
    throw std::invalid_argument("GridSpec: x_max - x_min != (n-1)*dx");
}

GridSpec make_grid(double left, double right, double dx, double dt_factor) {
  if (dx <= 0.0) throw std::invalid_argument("make_grid: dx must be > 0");
  if (left < 0.0 || right <= 0.0)
    throw std::invalid_argument("make_grid: domain must straddle the origin");
  GridSpec g;
  g.dx = dx;
  const int64_t n_left = static_cast<int64_t>(std::ceil(left / dx - 1e-12));
  const int64_t n_right = static_cast<int64_t>(std::ceil(right / dx - 1e-12));
  g.origin_index = n_left;
  g.n = n_left + n_right + 1;
  g.x_min = -static_cast<double>(n_left) * dx;
  g.x_max = static_cast<double>(n_right) * dx;
  g.dt = dt_factor * dx * dx;
  g.validate();
  return g;
}

double default_half_width(double theta, double t_end) {
  return 2.0 * theta * t_end + 12.0 * std::max(1.0, std::sqrt(t_end));
}

void FieldState::validate() const {
  grid.validate();
  if (static_cast<int64_t>(h.size()) != grid.n)
    throw std::invalid_argument("FieldState: h size does not match grid");
  for (double v : h)
    if (!std::isfinite(v))
      throw std::invalid_argument("FieldState: non-finite height value");
  if (t < 0.0) throw std::invalid_argument("FieldState: t must be >= 0");
}

void CoupledState::validate() const {
  h_minus.validate();
  h_plus.validate();
  if (h_minus.grid.n != h_plus.grid.n ||
      h_minus.grid.dx != h_plus.grid.dx ||
      h_minus.grid.origin_index != h_plus.grid.origin_index)
    throw std::invalid_argument("CoupledState: members on different grids");
  if (h_minus.t != h_plus.t)
    throw std::invalid_argument("CoupledState: members at different times");
  if (h_v) {
    h_v->validate();
    if (h_v->grid.n != h_minus.grid.n || h_v->t != h_minus.t)
      throw std::invalid_argument("CoupledState: h_v inconsistent");
  }
}

FieldState recenter(const FieldState& f) {
  FieldState out = f;
  const double h0 = f.h[static_cast<size_t>(f.grid.origin_index)];
  for (auto& v : out.h) v -= h0;
  out.h[static_cast<size_t>(f.grid.origin_index)] = 0.0;
  return out;
}

double eval_at(const FieldState& f, double x) {
  const GridSpec& g = f.grid;
  if (x < g.x_min - 1e-9 * g.dx || x > g.x_max + 1e-9 * g.dx)
    throw std::out_of_range("eval_at: x outside grid domain");
  const double s = (x - g.x_min) / g.dx;
  int64_t i = static_cast<int64_t>(std::floor(s));
  if (i < 0) i = 0;
  if (i >= g.n - 1) i = g.n - 2;
  const double frac = s - static_cast<double>(i);
  if (frac <= 1e-12) return f.h[static_cast<size_t>(i)];
  if (frac >= 1.0 - 1e-12) return f.h[static_cast<size_t>(i + 1)];
  return f.h[static_cast<size_t>(i)] * (1.0 - frac) +
         f.h[static_cast<size_t>(i + 1)] * frac;
}

namespace {

// Least-squares slope of h over grid indices [lo, hi).
double window_slope(const FieldState& f, int64_t lo, int64_t hi) {
  const int64_t m = hi - lo;
  if (m < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int64_t i = lo; i < hi; ++i) {
    const double x = f.grid.x_at(i);
    const double y = f.h[static_cast<size_t>(i)];
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(m);
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void edge_slopes(const FieldState& f, double edge_fraction, double* left,
                 double* right) {
  const int64_t w =
      std::max<int64_t>(2, static_cast<int64_t>(std::llround(
                               edge_fraction * static_cast<double>(f.grid.n))));
  *left = window_slope(f, 0, w);
  *right = window_slope(f, f.grid.n - w, f.grid.n);
}

}  // namespace

SpaceReport validate_space(const FieldState& f, SpaceKind which, double theta,
                           double edge_fraction) {
  SpaceReport r;
  r.which = which;
  r.pin_residual = std::fabs(f.h[static_cast<size_t>(f.grid.origin_index)]);
  edge_slopes(f, edge_fraction, &r.slope_left_minus, &r.slope_right_minus);
  r.slope_left_plus = r.slope_left_minus;
  r.slope_right_plus = r.slope_right_minus;
  // Slope tolerance scales like the Brownian fluctuation of a windowed
  // slope estimate over the edge window.
  const double win = edge_fraction * (f.grid.x_max - f.grid.x_min);
  r.slope_tol = std::max(0.05, 6.0 / std::sqrt(std::max(win, 1e-6)));
  std::ostringstream detail;
  switch (which) {
    case SpaceKind::CKpz0:
      r.pass = r.pin_residual <= 1e-9;
      detail << "pin residual " << r.pin_residual;
      break;
    case SpaceKind::V: {
      const bool ok_l = std::fabs(r.slope_left_minus + theta) <= r.slope_tol;
      const bool ok_r = std::fabs(r.slope_right_minus - theta) <= r.slope_tol;
      r.pass = ok_l && ok_r;
      detail << "V slopes (" << r.slope_left_minus << ", "
             << r.slope_right_minus << ") vs (-" << theta << ", " << theta
             << ")";
      break;
    }
    default:
      throw std::invalid_argument(
          "validate_space: pair spaces need validate_space_pair");
  }
  r.detail = detail.str();
  return r;
}

SpaceReport validate_space_pair(const FieldState& f_minus,
                                const FieldState& f_plus, SpaceKind which,
                                double theta, double edge_fraction) {
  SpaceReport r;
  r.which = which;
  r.pin_residual =
      std::max(std::fabs(f_minus.h[static_cast<size_t>(f_minus.grid.origin_index)]),
               std::fabs(f_plus.h[static_cast<size_t>(f_plus.grid.origin_index)]));
  edge_slopes(f_minus, edge_fraction, &r.slope_left_minus, &r.slope_right_minus);
  edge_slopes(f_plus, edge_fraction, &r.slope_left_plus, &r.slope_right_plus);
  const double win = edge_fraction * (f_minus.grid.x_max - f_minus.grid.x_min);
  r.slope_tol = std::max(0.05, 6.0 / std::sqrt(std::max(win, 1e-6)));

  const bool slopes_ok =
      std::fabs(r.slope_left_minus + theta) <= r.slope_tol &&
      std::fabs(r.slope_right_minus + theta) <= r.slope_tol &&
      std::fabs(r.slope_left_plus - theta) <= r.slope_tol &&
      std::fabs(r.slope_right_plus - theta) <= r.slope_tol;

  r.gap_cells = f_minus.grid.n - 1;
  for (int64_t i = 0; i + 1 < f_minus.grid.n; ++i) {
    const double g0 = f_plus.h[static_cast<size_t>(i)] -
                      f_minus.h[static_cast<size_t>(i)];
    const double g1 = f_plus.h[static_cast<size_t>(i + 1)] -
                      f_minus.h[static_cast<size_t>(i + 1)];
    if (!(g1 > g0)) ++r.monotonicity_violations;
  }

  std::ostringstream detail;
  switch (which) {
    case SpaceKind::Y:
      r.pass = slopes_ok;
      break;
    case SpaceKind::X:
      r.pass = slopes_ok && r.monotonicity_violations == 0;
      break;
    default:
      throw std::invalid_argument(
          "validate_space_pair: use validate_space for single fields");
  }
  detail << "slopes -(" << r.slope_left_minus << "," << r.slope_right_minus
         << ") +(" << r.slope_left_plus << "," << r.slope_right_plus
         << ") tol " << r.slope_tol << "; gap violations "
         << r.monotonicity_violations << "/" << r.gap_cells;
  r.detail = detail.str();
  return r;
}

double log_mean_exp(double a, double b) {
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m)) - std::log(2.0);
}

}  // namespace kpzlab
