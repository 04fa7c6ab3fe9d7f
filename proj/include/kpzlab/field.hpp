#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kpzlab {

// Uniform space grid with a grid point pinned exactly at x = 0.
struct GridSpec {
  double x_min = 0.0;
  double x_max = 0.0;
  double dx = 0.0;
  int64_t n = 0;            // grid point count, x_max - x_min = (n-1)*dx
  double dt = 0.0;
  int64_t origin_index = 0; // index with x exactly 0

  double x_at(int64_t i) const { return x_min + static_cast<double>(i) * dx; }

  // Global noise-cell id shared between full-line and half-line runs.
  int64_t global_cell(int64_t i) const { return i - origin_index; }

  void validate() const;
};

// Builds a grid containing [-left, right] with spacing dx; dt = dt_factor*dx^2.
GridSpec make_grid(double left, double right, double dx, double dt_factor = 0.4);

// Default domain half-width for a run to horizon t_end at tilt theta: the
// relevant kernel mass lives near |y| ~ theta*t, so boundaries sit well
// outside it.
double default_half_width(double theta, double t_end);

// A log-height profile h(t,.) on a grid. phi = exp(h) > 0 by construction.
struct FieldState {
  GridSpec grid;
  std::vector<double> h;
  double t = 0.0;
  double slope_left = 0.0;   // asymptotic slope used by boundary ghosts
  double slope_right = 0.0;

  void validate() const;
};

// One or two (plus optional V) solutions sharing a grid and a clock.
struct CoupledState {
  FieldState h_minus;
  FieldState h_plus;
  std::optional<FieldState> h_v;

  double t() const { return h_minus.t; }
  void validate() const;
};

// h'(x) = h(x) - h(0); exact zero at the origin.
FieldState recenter(const FieldState& f);

// Piecewise-linear interpolation; exact at grid points. Throws out of domain.
double eval_at(const FieldState& f, double x);

// Space-membership diagnostics against the finite-domain proxies of the
// function classes used for pairs: pinning residual, boundary slope
// estimates, and monotonicity of the gap h_plus - h_minus.
enum class SpaceKind { CKpz0, Y, X, V };

struct SpaceReport {
  SpaceKind which = SpaceKind::CKpz0;
  bool pass = false;
  double pin_residual = 0.0;        // |h(0)| (max over members)
  double slope_left_minus = 0.0;    // estimated boundary slopes
  double slope_right_minus = 0.0;
  double slope_left_plus = 0.0;
  double slope_right_plus = 0.0;
  double slope_tol = 0.0;
  int64_t monotonicity_violations = 0;
  int64_t gap_cells = 0;
  std::string detail;
};

// Slope estimates use least squares over the outer `edge_fraction` of each
// side (a finite-domain convention; the true classes live on all of R).
SpaceReport validate_space(const FieldState& f, SpaceKind which, double theta,
                           double edge_fraction = 0.10);
SpaceReport validate_space_pair(const FieldState& f_minus,
                                const FieldState& f_plus, SpaceKind which,
                                double theta, double edge_fraction = 0.10);

// log((exp(a) + exp(b)) / 2), overflow-safe.
double log_mean_exp(double a, double b);

}  // namespace kpzlab
