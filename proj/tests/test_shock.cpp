#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "kpzlab/field.hpp"
#include "kpzlab/shock.hpp"

using namespace kpzlab;

namespace {

CoupledState pair_with_gap(const GridSpec& grid, double theta, double x0) {
  // h_minus = -theta (x - x0), h_plus = +theta (x - x0): gap 2 theta (x - x0).
  CoupledState st;
  st.h_minus.grid = st.h_plus.grid = grid;
  st.h_minus.h.resize(static_cast<size_t>(grid.n));
  st.h_plus.h.resize(static_cast<size_t>(grid.n));
  for (int64_t i = 0; i < grid.n; ++i) {
    const double x = grid.x_at(i);
    st.h_minus.h[static_cast<size_t>(i)] = -theta * (x - x0);
    st.h_plus.h[static_cast<size_t>(i)] = theta * (x - x0);
  }
  st.h_minus.slope_left = st.h_plus.slope_right = 0.0;
  st.h_minus.slope_left = -theta;
  st.h_minus.slope_right = -theta;
  st.h_plus.slope_left = theta;
  st.h_plus.slope_right = theta;
  st.h_minus.t = st.h_plus.t = 0.25;
  return st;
}

}  // namespace

TEST_CASE("exact linear gap: crossing at its root, unique") {
  const GridSpec grid = make_grid(4.0, 4.0, 0.1);
  const ShockRecord at0 = find_shock(pair_with_gap(grid, 1.0, 0.0));
  CHECK(at0.b == 0.0);
  CHECK(at0.j0 == 0.0);
  CHECK(at0.unique);
  CHECK(at0.violations == 0);
  CHECK(at0.t == 0.25);

  const ShockRecord at1 = find_shock(pair_with_gap(grid, 1.0, 1.0));
  CHECK(at1.b == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(at1.j0 == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(at1.unique);

  // Off-node root: linear interpolation is exact for a linear gap.
  const ShockRecord mid = find_shock(pair_with_gap(grid, 1.0, 0.55));
  CHECK(mid.b == doctest::Approx(0.55).epsilon(1e-12));
}

TEST_CASE("adding one constant to both members moves nothing") {
  const GridSpec grid = make_grid(4.0, 4.0, 0.1);
  CoupledState st = pair_with_gap(grid, 1.0, 0.7);
  const ShockRecord base = find_shock(st);
  for (auto& v : st.h_minus.h) v += 3.25;
  for (auto& v : st.h_plus.h) v += 3.25;
  const ShockRecord shifted = find_shock(st);
  CHECK(shifted.b == doctest::Approx(base.b).epsilon(1e-12));
  CHECK(shifted.j0 == doctest::Approx(base.j0).epsilon(1e-12));
}

TEST_CASE("a gap with no sign change on the grid is an error") {
  const GridSpec grid = make_grid(1.0, 1.0, 0.1);
  CoupledState st = pair_with_gap(grid, 1.0, 0.0);
  for (auto& v : st.h_plus.h) v += 10.0;
  CHECK_THROWS_WITH_AS(find_shock(st),
                       doctest::Contains("no sign change"),
                       std::runtime_error);
}

TEST_CASE("sup statistic: zero on the linear gap, analytic on a sine bump") {
  const GridSpec grid = make_grid(4.0, 4.0, 0.01);
  const CoupledState lin = pair_with_gap(grid, 1.0, 0.0);
  CHECK(m_statistic(lin, 1.0, 0.5) == 0.0);
  CHECK_THROWS(m_statistic(lin, 1.0, 0.0));
  CHECK_THROWS(m_statistic(lin, 1.0, 2.0));

  CoupledState bump = pair_with_gap(grid, 1.0, 0.0);
  for (int64_t i = 0; i < grid.n; ++i)
    bump.h_plus.h[static_cast<size_t>(i)] += 0.3 * std::sin(grid.x_at(i));
  // max over x of 0.3 sin x - 0.1 x sits at cos x = 1/3.
  const double xs = std::acos(1.0 / 3.0);
  const double expect = 0.3 * std::sin(xs) - 0.1 * xs;
  CHECK(m_statistic(bump, 1.0, 0.1) == doctest::Approx(expect).epsilon(1e-4));
}

TEST_CASE("recentring on the crossing pins it at the origin") {
  const GridSpec grid = make_grid(4.0, 4.0, 0.1);
  CoupledState st = pair_with_gap(grid, 1.0, 0.55);
  for (int64_t i = 0; i < grid.n; ++i) {
    const double x = grid.x_at(i);
    st.h_minus.h[static_cast<size_t>(i)] += 0.05 * x * x / 16.0;
    st.h_plus.h[static_cast<size_t>(i)] += 0.05 * x * x / 16.0;
  }
  const CoupledState moved = shift_to_shock(st);
  const ShockRecord rec = find_shock(moved);
  CHECK(std::fabs(rec.b) < 1e-9);
  CHECK(std::fabs(moved.h_minus.h[static_cast<size_t>(grid.origin_index)]) <
        1e-9);
  CHECK(std::fabs(moved.h_plus.h[static_cast<size_t>(grid.origin_index)]) <
        1e-9);
  CHECK(moved.t() == st.t());
}
