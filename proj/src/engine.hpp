#pragma once

// Shared inner loops for the split-exponential and Euler schemes. The
// fields are evolved in linear space (u ~ phi) with a per-field scalar log
// offset, renormalized periodically, so profiles spanning hundreds of log
// units neither overflow nor underflow.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "kpzlab/field.hpp"
#include "kpzlab/rng.hpp"

namespace kpzlab::detail {

struct LinearField {
  std::vector<double> u;
  double off = 0.0;
  double ghost_left = 1.0;   // e^{-slope_left*dx}
  double ghost_right = 1.0;  // e^{+slope_right*dx}
  bool wall_left = false;    // absorbing cell pinned to zero at index 0

  static LinearField from_height(const std::vector<double>& h, double dx,
                                 double slope_left, double slope_right,
                                 bool wall_left = false) {
    LinearField f;
    const double m = *std::max_element(h.begin(), h.end());
    f.off = m;
    f.u.resize(h.size());
    for (size_t i = 0; i < h.size(); ++i) f.u[i] = std::exp(h[i] - m);
    f.ghost_left = std::exp(-slope_left * dx);
    f.ghost_right = std::exp(slope_right * dx);
    f.wall_left = wall_left;
    if (wall_left) f.u[0] = 0.0;
    return f;
  }

  // h_i = off + log u_i; underflowed cells record the floor of the
  // representable log range.
  void to_height(std::vector<double>* h) const {
    h->resize(u.size());
    for (size_t i = 0; i < u.size(); ++i)
      (*h)[i] = u[i] > 0.0 ? off + std::log(u[i]) : off - 745.0;
  }

  void renormalize() {
    const double m = *std::max_element(u.begin(), u.end());
    if (!(m > 0.0) || !std::isfinite(m))
      throw std::runtime_error("solver: field became non-finite or non-positive");
    off += std::log(m);
    const double inv = 1.0 / m;
    for (auto& v : u) v *= inv;
  }
};

// Explicit heat step u += r (u_{i+1} - 2 u_i + u_{i-1}) with sloped ghosts
// (or an absorbing wall on the left). scratch holds the previous values.
inline void heat_step(LinearField& f, double r, std::vector<double>& scratch) {
  const size_t n = f.u.size();
  scratch = f.u;
  const double left_ghost =
      f.wall_left ? 0.0 : scratch[0] * f.ghost_left;
  const double right_ghost = scratch[n - 1] * f.ghost_right;
  const size_t first = f.wall_left ? 1 : 0;
  for (size_t i = first; i < n; ++i) {
    const double um = i == 0 ? left_ghost : scratch[i - 1];
    const double up = i == n - 1 ? right_ghost : scratch[i + 1];
    f.u[i] += r * (um - 2.0 * scratch[i] + up);
  }
  if (f.wall_left) f.u[0] = 0.0;
}

// Variant with caller-supplied ghost values (already in f's u-scale); used
// to keep a log-mean-exp member exactly consistent with its parents at the
// boundaries.
inline void heat_step_explicit(LinearField& f, double r, double left_ghost,
                               double right_ghost,
                               std::vector<double>& scratch) {
  const size_t n = f.u.size();
  scratch = f.u;
  const size_t first = f.wall_left ? 1 : 0;
  if (f.wall_left) left_ghost = 0.0;
  for (size_t i = first; i < n; ++i) {
    const double um = i == 0 ? left_ghost : scratch[i - 1];
    const double up = i == n - 1 ? right_ghost : scratch[i + 1];
    f.u[i] += r * (um - 2.0 * scratch[i] + up);
  }
  if (f.wall_left) f.u[0] = 0.0;
}

// Multiplicative factors exp(sigma z - sigma^2/2) for one step; mean one.
inline void noise_factors(const StreamKey& key, int64_t step_index,
                          int64_t cell_begin, double sigma,
                          std::vector<double>& factors) {
  const double half_var = 0.5 * sigma * sigma;
  NoiseSlice slice = make_noise_slice(key, step_index, cell_begin,
                                      static_cast<int64_t>(factors.size()));
  for (size_t i = 0; i < factors.size(); ++i)
    factors[i] = std::exp(sigma * slice.values[i] - half_var);
}

inline void apply_factors(LinearField& f, const std::vector<double>& factors) {
  const size_t first = f.wall_left ? 1 : 0;
  for (size_t i = first; i < f.u.size(); ++i) f.u[i] *= factors[i];
}

// Euler cross-check: multiply by (1 + sigma z) instead of the exponential.
inline void apply_factors_euler(LinearField& f, const StreamKey& key,
                                int64_t step_index, int64_t cell_begin,
                                double sigma) {
  NoiseSlice slice = make_noise_slice(key, step_index, cell_begin,
                                      static_cast<int64_t>(f.u.size()));
  const size_t first = f.wall_left ? 1 : 0;
  for (size_t i = first; i < f.u.size(); ++i)
    f.u[i] *= 1.0 + sigma * slice.values[i];
}

constexpr int kRenormInterval = 64;

}  // namespace kpzlab::detail
