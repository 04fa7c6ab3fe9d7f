#pragma once

#include <utility>
#include <vector>

#include "kpzlab/field.hpp"
#include "kpzlab/rng.hpp"

namespace kpzlab {

// A sampled initial profile pinned at the origin.
struct PathSample {
  GridSpec grid;
  std::vector<double> values;
  bool pinned = true;

  double at(int64_t i) const { return values[static_cast<size_t>(i)]; }
};

// A coupled pair of initial profiles, optionally carrying an importance
// weight (mean one across an ensemble when used as the shock-frame tilt).
struct WeightedPairSample {
  PathSample f_minus;
  PathSample f_plus;
  double weight = 1.0;
  double theta = 0.0;
  // Derivative of the gap at 0 from the underlying exponential integral;
  // 2*theta times (weight) is Gamma(2*theta, 1) distributed.
  double gap_derivative_at_zero = 0.0;
  // Diagnostic: analytic bound on the truncated-tail contribution to the
  // exponential integral, relative to the kept part.
  double tail_bound = 0.0;
};

// Tail truncation for the exponential integrals: the integrand decays like
// exp(2*theta*y), so this keeps the analytic remainder below ~exp(-20).
double default_tail_m(double theta);

// Two-sided random walk with N(0, dx) increments outward from 0 plus drift
// theta*x. Value exactly 0 at the origin.
PathSample sample_bm_with_drift(NoiseStream& stream, const GridSpec& grid,
                                double theta);

// log of the exponential functional integral(x - tail_m, x) of
// exp{(B2(y)-B2(x)) - (B1(y)-B1(x)) + 2 theta (y-x)} dy by trapezoid
// quadrature on the sampling grid. tail_bound (optional out) receives the
// analytic bound on the dropped tail relative to the kept integral.
double s_theta_at(const PathSample& b1, const PathSample& b2, double theta,
                  double x, double tail_m, double* tail_bound = nullptr);

// Jointly invariant coupled initial law: f_minus = B1 - theta x and f_plus
// its exponentially smoothed partner, both pinned, with the gap strictly
// increasing. Weight is left at 1; apply the tilt via hat_nu_weight.
WeightedPairSample sample_nu_theta(NoiseStream& stream, const GridSpec& grid,
                                   double theta,
                                   double tail_m = -1.0);

// The smoothing map on pinned pairs: first component unchanged, second
// replaced by its exponentially averaged version so the gap becomes
// nondecreasing. Inputs must extend at least tail_m below x_min's working
// window (handled by ghost linear extension using the asymptotic slopes).
std::pair<PathSample, PathSample> apply_D(const PathSample& g_minus,
                                          const PathSample& g_plus,
                                          double theta, double tail_m = -1.0);

// (integral_{-M}^{0} exp{B2 - B1 + 2 theta y} dy)^{-1}; exact integral
// formula, never finite differences of the gap.
double pair_derivative_at_zero(const WeightedPairSample& pair);

// Importance weight for the shock-tilted law: gap derivative over 2*theta.
double hat_nu_weight(const WeightedPairSample& pair);

// Pointwise log-mean-exp of the pair.
PathSample v_combine(const PathSample& f_minus, const PathSample& f_plus);

// Splits a V-shaped profile into a coupled pair with gap exactly
// 2*theta*x; v_combine inverts it to round-off.
std::pair<PathSample, PathSample> a_split(const PathSample& f_v, double theta);

// Deterministic pair (-theta x, theta x).
std::pair<PathSample, PathSample> flat_pair(double theta, const GridSpec& grid);

// Deterministic V profile theta*|x|.
PathSample v_abs_profile(double theta, const GridSpec& grid);

FieldState to_field(const PathSample& p, double slope_left, double slope_right);

}  // namespace kpzlab
