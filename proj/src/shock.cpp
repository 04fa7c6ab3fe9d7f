#include "kpzlab/shock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace kpzlab {

namespace {

std::vector<double> gap_of(const CoupledState& state) {
  const size_t n = state.h_minus.h.size();
  std::vector<double> j(n);
  for (size_t i = 0; i < n; ++i) j[i] = state.h_plus.h[i] - state.h_minus.h[i];
  return j;
}

// Shifted profile g(x) = f(b + x) - f(b) on the original grid; out-of-range
// nodes use the linear extension with the field's edge slopes.
FieldState shift_field(const FieldState& f, double b) {
  const GridSpec& g = f.grid;
  const double fb = eval_at(f, std::clamp(b, g.x_min, g.x_max));
  FieldState out = f;
  for (int64_t i = 0; i < g.n; ++i) {
    const double x = g.x_at(i) + b;
    double v;
    if (x < g.x_min)
      v = f.h.front() + f.slope_left * (x - g.x_min);
    else if (x > g.x_max)
      v = f.h.back() + f.slope_right * (x - g.x_max);
    else
      v = eval_at(f, x);
    out.h[static_cast<size_t>(i)] = v - fb;
  }
  return out;
}

}  // namespace

ShockRecord find_shock(const CoupledState& state) {
  state.validate();
  const std::vector<double> j = gap_of(state);
  const GridSpec& g = state.h_minus.grid;

  ShockRecord rec;
  rec.t = state.t();
  rec.j0 = j[static_cast<size_t>(g.origin_index)];

  // Roots: exact-zero nodes (runs of zeros collapse to their first node)
  // and strict sign-change brackets, resolved by linear interpolation.
  struct Root {
    double x;
    double endpoint_abs;
  };
  std::vector<Root> roots;
  for (int64_t i = 0; i < g.n; ++i) {
    const double a = j[static_cast<size_t>(i)];
    if (a == 0.0) {
      if (i == 0 || j[static_cast<size_t>(i - 1)] != 0.0)
        roots.push_back({g.x_at(i), 0.0});
      continue;
    }
    if (i + 1 < g.n) {
      const double b = j[static_cast<size_t>(i + 1)];
      if (a * b < 0.0)
        roots.push_back({g.x_at(i) + g.dx * (0.0 - a) / (b - a),
                         std::min(std::fabs(a), std::fabs(b))});
    }
  }
  if (roots.empty()) {
    std::ostringstream msg;
    msg << "find_shock: gap has no sign change on the grid (domain too "
           "small); boundary gaps J(x_min)="
        << j.front() << ", J(x_max)=" << j.back();
    throw std::runtime_error(msg.str());
  }
  const Root* best = &roots.front();
  for (const Root& r : roots)
    if (r.endpoint_abs < best->endpoint_abs) best = &r;
  rec.b = best->x;
  rec.unique = roots.size() == 1;
  rec.violations = static_cast<int64_t>(roots.size()) - 1;
  return rec;
}

double m_statistic(const CoupledState& state, double theta, double eps) {
  if (!(eps > 0.0) || !(eps < 2.0 * theta))
    throw std::invalid_argument("m_statistic: eps must lie in (0, 2 theta)");
  state.validate();
  const std::vector<double> j = gap_of(state);
  const GridSpec& g = state.h_minus.grid;
  const double j0 = j[static_cast<size_t>(g.origin_index)];
  double m = 0.0;
  for (int64_t i = 0; i < g.n; ++i) {
    const double x = g.x_at(i);
    const double v =
        std::fabs(j[static_cast<size_t>(i)] - j0 - 2.0 * theta * x) -
        eps * std::fabs(x);
    m = std::max(m, v);
  }
  return m;
}

CoupledState shift_to_shock(const CoupledState& state) {
  const ShockRecord rec = find_shock(state);
  CoupledState out = state;
  out.h_minus = shift_field(state.h_minus, rec.b);
  out.h_plus = shift_field(state.h_plus, rec.b);
  if (state.h_v) out.h_v = shift_field(*state.h_v, rec.b);
  return out;
}

}  // namespace kpzlab
