#pragma once

#include "kpzlab/field.hpp"
#include "kpzlab/rng.hpp"
#include "kpzlab/solver.hpp"

namespace kpzlab {

// Heat propagator killed at the origin:
// [G(t, x-y) - G(t, x+y)] 1{x, y >= 0}, with G the kernel of d/dt = 1/2 d2/dx2.
double dirichlet_heat_kernel(double t, double x, double y);

// Half-line solution started from exp(theta*|x|) with an absorbing wall cell
// pinned to phi = 0 at x = 0. `sign` picks the side: +1 evolves on x >= 0
// (grid.x_min == 0, wall at the first cell), -1 on x <= 0 (grid.x_max == 0,
// wall at the last cell). Noise cells are addressed globally, so a run with
// the same key as a full-line run consumes exactly the restriction of that
// run's noise. Returned h is log phi; the wall cell holds -infinity
// (phi exactly 0), so the result fails FieldState::validate by design.
FieldState evolve_halfline(double theta, int sign, const GridSpec& grid,
                           const StreamKey& key, double t_end,
                           const SchemeConfig& cfg);

// phi_half(t,x) / phi_full(t,x) under shared noise: the polymer probability
// of never crossing the origin. Lies in [0, 1] up to discretization.
double restriction_ratio(const FieldState& phi_half,
                         const FieldState& full_state, double x);

// Closed form of the ratio in zero-noise mode:
// Phi((x + theta t)/sqrt(t)) - exp(-2 theta x) Phi((theta t - x)/sqrt(t))
// for x >= 0 (mirror for x < 0).
double zero_noise_restriction_ratio(double t, double x, double theta);

}  // namespace kpzlab
