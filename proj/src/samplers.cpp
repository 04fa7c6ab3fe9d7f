#include "kpzlab/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kpzlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

// Running trapezoid accumulator for integral exp(w(y)) dy with a floating
// reference level, so the sum never overflows even though w itself may
// span hundreds of log units.
class ScaledCumulative {
 public:
  explicit ScaledCumulative(double dx) : half_dx_(0.5 * dx) {}

  void start(double w0) {
    ref_ = w0;
    prev_ = 1.0;
    sum_ = 0.0;
  }

  void add(double w) {
    double e = w - ref_;
    if (e > 600.0 || sum_ > 1e290) {
      // Re-reference to the current exponent.
      const double shift = std::max(e - 1.0, std::log(sum_ + 1e-300));
      sum_ *= std::exp(-shift);
      prev_ *= std::exp(-shift);
      ref_ += shift;
      e = w - ref_;
    }
    const double cur = std::exp(e);
    sum_ += half_dx_ * (prev_ + cur);
    prev_ = cur;
  }

  double log_value() const {
    return sum_ > 0.0 ? ref_ + std::log(sum_) : kNegInf;
  }

 private:
  double half_dx_;
  double ref_ = 0.0;
  double prev_ = 1.0;
  double sum_ = 0.0;
};

}  // namespace

double default_tail_m(double theta) {
  if (theta <= 0.0) throw std::invalid_argument("default_tail_m: theta must be > 0");
  return std::max(20.0 / (2.0 * theta), 10.0);
}

PathSample sample_bm_with_drift(NoiseStream& stream, const GridSpec& grid,
                                double theta) {
  grid.validate();
  PathSample p;
  p.grid = grid;
  p.values.assign(static_cast<size_t>(grid.n), 0.0);
  const double sigma = std::sqrt(grid.dx);
  const int64_t o = grid.origin_index;
  // Outward from the origin: right side first, then left.
  for (int64_t i = o + 1; i < grid.n; ++i)
    p.values[static_cast<size_t>(i)] =
        p.values[static_cast<size_t>(i - 1)] + sigma * stream.next();
  for (int64_t i = o - 1; i >= 0; --i)
    p.values[static_cast<size_t>(i)] =
        p.values[static_cast<size_t>(i + 1)] + sigma * stream.next();
  if (theta != 0.0)
    for (int64_t i = 0; i < grid.n; ++i)
      p.values[static_cast<size_t>(i)] += theta * grid.x_at(i);
  p.pinned = true;
  return p;
}

double s_theta_at(const PathSample& b1, const PathSample& b2, double theta,
                  double x, double tail_m, double* tail_bound) {
  const GridSpec& g = b1.grid;
  if (b2.grid.n != g.n || b2.grid.dx != g.dx)
    throw std::invalid_argument("s_theta_at: paths on different grids");
  const double lo = x - tail_m;
  if (lo < g.x_min - 1e-9 * g.dx)
    throw std::invalid_argument("s_theta_at: grid does not extend tail_m below x");
  const int64_t i_lo =
      static_cast<int64_t>(std::ceil((lo - g.x_min) / g.dx - 1e-9));
  const int64_t i_hi =
      static_cast<int64_t>(std::llround((x - g.x_min) / g.dx));
  if (i_hi <= i_lo)
    throw std::invalid_argument("s_theta_at: empty quadrature window");
  const double b1x = b1.at(i_hi);
  const double b2x = b2.at(i_hi);
  auto w = [&](int64_t i) {
    const double y = g.x_at(i);
    return (b2.at(i) - b2x) - (b1.at(i) - b1x) + 2.0 * theta * (y - x);
  };
  double log_sum = kNegInf;
  const double log_half_dx = std::log(0.5 * g.dx);
  double w_prev = w(i_lo);
  for (int64_t i = i_lo + 1; i <= i_hi; ++i) {
    const double w_cur = w(i);
    log_sum = log_add_exp(log_sum, log_add_exp(w_prev, w_cur) + log_half_dx);
    w_prev = w_cur;
  }
  if (tail_bound != nullptr)
    *tail_bound = std::exp(w(i_lo) - std::log(2.0 * theta) - log_sum);
  return log_sum;
}

namespace {

// Shared core: given w on grid indices [0, m) at spacing dx, produces the
// cumulative log integral at every index >= first_out.
void cumulative_log_integral(const std::vector<double>& w, double dx,
                             int64_t first_out, std::vector<double>* log_i) {
  const int64_t m = static_cast<int64_t>(w.size());
  log_i->assign(static_cast<size_t>(m), kNegInf);
  ScaledCumulative acc(dx);
  acc.start(w[0]);
  for (int64_t j = 1; j < m; ++j) {
    acc.add(w[static_cast<size_t>(j)]);
    if (j >= first_out) (*log_i)[static_cast<size_t>(j)] = acc.log_value();
  }
}

}  // namespace

WeightedPairSample sample_nu_theta(NoiseStream& stream, const GridSpec& grid,
                                   double theta, double tail_m) {
  if (theta <= 0.0)
    throw std::invalid_argument("sample_nu_theta: theta must be > 0");
  grid.validate();
  if (tail_m <= 0.0) tail_m = default_tail_m(theta);
  const int64_t ext = static_cast<int64_t>(std::ceil(tail_m / grid.dx - 1e-9));

  // Underlying driftless paths on the extended index range [-ext, n).
  const int64_t m = grid.n + ext;
  std::vector<double> b1(static_cast<size_t>(m), 0.0);
  std::vector<double> b2(static_cast<size_t>(m), 0.0);
  const double sigma = std::sqrt(grid.dx);
  const int64_t o = ext + grid.origin_index;  // origin in extended indexing
  for (int64_t i = o + 1; i < m; ++i)
    b1[static_cast<size_t>(i)] = b1[static_cast<size_t>(i - 1)] + sigma * stream.next();
  for (int64_t i = o - 1; i >= 0; --i)
    b1[static_cast<size_t>(i)] = b1[static_cast<size_t>(i + 1)] + sigma * stream.next();
  for (int64_t i = o + 1; i < m; ++i)
    b2[static_cast<size_t>(i)] = b2[static_cast<size_t>(i - 1)] + sigma * stream.next();
  for (int64_t i = o - 1; i >= 0; --i)
    b2[static_cast<size_t>(i)] = b2[static_cast<size_t>(i + 1)] + sigma * stream.next();

  std::vector<double> w(static_cast<size_t>(m));
  const double x_lo = grid.x_min - static_cast<double>(ext) * grid.dx;
  for (int64_t i = 0; i < m; ++i) {
    const double y = x_lo + static_cast<double>(i) * grid.dx;
    w[static_cast<size_t>(i)] =
        b2[static_cast<size_t>(i)] - b1[static_cast<size_t>(i)] + 2.0 * theta * y;
  }

  std::vector<double> log_i;
  cumulative_log_integral(w, grid.dx, ext, &log_i);
  const double log_i0 = log_i[static_cast<size_t>(o)];

  WeightedPairSample out;
  out.theta = theta;
  out.weight = 1.0;
  out.f_minus.grid = grid;
  out.f_plus.grid = grid;
  out.f_minus.values.resize(static_cast<size_t>(grid.n));
  out.f_plus.values.resize(static_cast<size_t>(grid.n));
  for (int64_t i = 0; i < grid.n; ++i) {
    const double x = grid.x_at(i);
    const double fm = b1[static_cast<size_t>(ext + i)] - theta * x;
    out.f_minus.values[static_cast<size_t>(i)] = fm;
    out.f_plus.values[static_cast<size_t>(i)] =
        fm + (log_i[static_cast<size_t>(ext + i)] - log_i0);
  }
  // Exact pinning at the origin.
  out.f_minus.values[static_cast<size_t>(grid.origin_index)] = 0.0;
  out.f_plus.values[static_cast<size_t>(grid.origin_index)] = 0.0;
  // w(0) = 0, so the gap derivative is 1/I(0).
  out.gap_derivative_at_zero = std::exp(-log_i0);
  out.tail_bound =
      std::exp(w[0] - std::log(2.0 * theta) - log_i0);
  return out;
}

std::pair<PathSample, PathSample> apply_D(const PathSample& g_minus,
                                          const PathSample& g_plus,
                                          double theta, double tail_m) {
  const GridSpec& grid = g_minus.grid;
  if (g_plus.grid.n != grid.n || g_plus.grid.dx != grid.dx)
    throw std::invalid_argument("apply_D: inputs on different grids");
  if (theta <= 0.0) throw std::invalid_argument("apply_D: theta must be > 0");
  if (tail_m <= 0.0) tail_m = default_tail_m(theta);

  // Convergence guard: the gap must grow out of the left boundary region,
  // or the tail integral diverges. Compare the mean gap over the outer 10%
  // against the gap at the origin; a window mean absorbs path noise that a
  // local slope estimate would mistake for divergence.
  {
    const int64_t wdw = std::max<int64_t>(2, grid.n / 10);
    double left_mean = 0.0;
    for (int64_t i = 0; i < wdw; ++i)
      left_mean += g_plus.at(i) - g_minus.at(i);
    left_mean /= static_cast<double>(wdw);
    const double gap0 =
        g_plus.at(grid.origin_index) - g_minus.at(grid.origin_index);
    if (!(left_mean < gap0))
      throw std::runtime_error(
          "apply_D: gap does not increase away from the left boundary; tail "
          "integral does not converge");
  }

  const int64_t ext = static_cast<int64_t>(std::ceil(tail_m / grid.dx - 1e-9));
  const int64_t m = grid.n + ext;
  std::vector<double> w(static_cast<size_t>(m));
  // Linear ghost extension of the gap with its asymptotic slope 2*theta.
  const double gap0 = g_plus.at(0) - g_minus.at(0);
  for (int64_t i = 0; i < ext; ++i)
    w[static_cast<size_t>(i)] =
        gap0 - 2.0 * theta * grid.dx * static_cast<double>(ext - i);
  for (int64_t i = 0; i < grid.n; ++i)
    w[static_cast<size_t>(ext + i)] = g_plus.at(i) - g_minus.at(i);

  std::vector<double> log_i;
  cumulative_log_integral(w, grid.dx, ext, &log_i);
  const double log_i0 = log_i[static_cast<size_t>(ext + grid.origin_index)];

  PathSample second;
  second.grid = grid;
  second.values.resize(static_cast<size_t>(grid.n));
  for (int64_t i = 0; i < grid.n; ++i)
    second.values[static_cast<size_t>(i)] =
        g_minus.at(i) + (log_i[static_cast<size_t>(ext + i)] - log_i0);
  // Pin the output pair.
  PathSample first = g_minus;
  const double f0 = first.at(grid.origin_index);
  const double s0 = second.at(grid.origin_index);
  for (auto& v : first.values) v -= f0;
  for (auto& v : second.values) v -= s0;
  first.values[static_cast<size_t>(grid.origin_index)] = 0.0;
  second.values[static_cast<size_t>(grid.origin_index)] = 0.0;
  first.pinned = second.pinned = true;
  return {std::move(first), std::move(second)};
}

double pair_derivative_at_zero(const WeightedPairSample& pair) {
  const double d = pair.gap_derivative_at_zero;
  if (!(d > 0.0) || !std::isfinite(d))
    throw std::runtime_error(
        "pair_derivative_at_zero: degenerate exponential integral");
  return d;
}

double hat_nu_weight(const WeightedPairSample& pair) {
  return pair_derivative_at_zero(pair) / (2.0 * pair.theta);
}

PathSample v_combine(const PathSample& f_minus, const PathSample& f_plus) {
  if (f_minus.grid.n != f_plus.grid.n)
    throw std::invalid_argument("v_combine: grids differ");
  PathSample out;
  out.grid = f_minus.grid;
  out.values.resize(f_minus.values.size());
  for (size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = log_mean_exp(f_minus.values[i], f_plus.values[i]);
  out.pinned = f_minus.pinned && f_plus.pinned;
  return out;
}

std::pair<PathSample, PathSample> a_split(const PathSample& f_v, double theta) {
  PathSample lo, hi;
  lo.grid = hi.grid = f_v.grid;
  lo.values.resize(f_v.values.size());
  hi.values.resize(f_v.values.size());
  for (int64_t i = 0; i < f_v.grid.n; ++i) {
    const double x = f_v.grid.x_at(i);
    const double fv = f_v.at(i);
    // log((e^{2 theta x} + 1)/2) evaluated overflow-safe; its mirror image
    // differs by exactly 2 theta x, which keeps the gap exactly linear.
    const double c = log_mean_exp(2.0 * theta * x, 0.0);
    lo.values[static_cast<size_t>(i)] = fv - c;
    hi.values[static_cast<size_t>(i)] = fv - (c - 2.0 * theta * x);
  }
  lo.pinned = hi.pinned = f_v.pinned;
  return {std::move(lo), std::move(hi)};
}

std::pair<PathSample, PathSample> flat_pair(double theta, const GridSpec& grid) {
  PathSample lo, hi;
  lo.grid = hi.grid = grid;
  lo.values.resize(static_cast<size_t>(grid.n));
  hi.values.resize(static_cast<size_t>(grid.n));
  for (int64_t i = 0; i < grid.n; ++i) {
    const double x = grid.x_at(i);
    lo.values[static_cast<size_t>(i)] = -theta * x;
    hi.values[static_cast<size_t>(i)] = theta * x;
  }
  lo.pinned = hi.pinned = true;
  return {std::move(lo), std::move(hi)};
}

PathSample v_abs_profile(double theta, const GridSpec& grid) {
  PathSample p;
  p.grid = grid;
  p.values.resize(static_cast<size_t>(grid.n));
  for (int64_t i = 0; i < grid.n; ++i)
    p.values[static_cast<size_t>(i)] = theta * std::fabs(grid.x_at(i));
  p.pinned = true;
  return p;
}

FieldState to_field(const PathSample& p, double slope_left, double slope_right) {
  FieldState f;
  f.grid = p.grid;
  f.h = p.values;
  f.t = 0.0;
  f.slope_left = slope_left;
  f.slope_right = slope_right;
  return f;
}

}  // namespace kpzlab
