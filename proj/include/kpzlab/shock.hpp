#pragma once

#include "kpzlab/field.hpp"

namespace kpzlab {

// One tracked shock observation: the zero crossing b of the gap
// J = h_plus - h_minus, plus the origin gap.
struct ShockRecord {
  double t = 0.0;
  double b = 0.0;
  double j0 = 0.0;
  bool unique = true;
  int64_t violations = 0;  // sign changes beyond the reported one
};

// Zero of the interpolated gap. With several sign changes (discretization
// noise: the continuum gap is strictly increasing) the bracket with the
// smallest endpoint |J| wins and unique is cleared. Throws when J has no
// sign change on the grid, quoting the boundary gap values.
ShockRecord find_shock(const CoupledState& state);

// sup over the grid of |J(t,x) - J(t,0) - 2 theta x| - eps |x|. Always >= 0
// (the expression vanishes at x = 0). Requires eps in (0, 2 theta).
double m_statistic(const CoupledState& state, double theta, double eps);

// Shifts both members so the shock crossing sits at (0, 0):
// g(x) = f(b + x) - f(b), resampled onto the original grid by linear
// interpolation; cells pushed past the domain edge are refilled by the
// sloped linear extension.
CoupledState shift_to_shock(const CoupledState& state);

}  // namespace kpzlab
