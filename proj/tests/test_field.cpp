#include <cmath>

#include "doctest.h"
#include "kpzlab/field.hpp"

using namespace kpzlab;

TEST_CASE("make_grid places a node exactly at zero") {
  const GridSpec g = make_grid(3.0, 2.0, 0.05);
  CHECK(g.x_at(g.origin_index) == 0.0);
  CHECK(g.dt == doctest::Approx(0.4 * 0.05 * 0.05));
  CHECK(g.x_min == doctest::Approx(-3.0));
  CHECK(g.x_max == doctest::Approx(2.0));
  CHECK(g.global_cell(g.origin_index) == 0);
}

TEST_CASE("grid validation rejects bad parameters") {
  GridSpec g = make_grid(1.0, 1.0, 0.1);
  CHECK_NOTHROW(g.validate());
  GridSpec unstable = g;
  unstable.dt = 0.6 * g.dx * g.dx;
  CHECK_THROWS(unstable.validate());
  GridSpec off_origin = g;
  off_origin.origin_index += 1;
  CHECK_THROWS(off_origin.validate());
  GridSpec tiny = g;
  tiny.n = 2;
  CHECK_THROWS(tiny.validate());
}

TEST_CASE("recenter pins the origin exactly") {
  FieldState f;
  f.grid = make_grid(1.0, 1.0, 0.25);
  f.h = {0.3, 0.1, -0.2, 0.4, 0.9, 1.3, 2.0, 2.2, 1.9};
  const FieldState r = recenter(f);
  CHECK(r.h[static_cast<size_t>(f.grid.origin_index)] == 0.0);
  CHECK(r.h[0] == doctest::Approx(0.3 - 0.9));
}

TEST_CASE("eval_at interpolates linearly and is exact at nodes") {
  FieldState f;
  f.grid = make_grid(1.0, 1.0, 0.5);
  f.h = {1.0, 2.0, 4.0, 8.0, 16.0};
  CHECK(eval_at(f, -1.0) == 1.0);
  CHECK(eval_at(f, 0.5) == 8.0);
  CHECK(eval_at(f, 0.25) == doctest::Approx(6.0));
  CHECK_THROWS(eval_at(f, 1.5));
}

TEST_CASE("log_mean_exp is exact and overflow safe") {
  CHECK(log_mean_exp(0.0, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_mean_exp(std::log(2.0), std::log(4.0)) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-14));
  CHECK(log_mean_exp(1000.0, 1000.0) == doctest::Approx(1000.0));
  CHECK(log_mean_exp(-1000.0, 1000.0) ==
        doctest::Approx(1000.0 - std::log(2.0)));
}

TEST_CASE("validate_space checks pinning and V slopes") {
  FieldState f;
  // Wide domain: the slope tolerance shrinks with the edge-window width, so
  // this is what makes theta = 1 and theta = 3 distinguishable.
  f.grid = make_grid(100.0, 100.0, 0.5);
  f.h.resize(static_cast<size_t>(f.grid.n));
  for (int64_t i = 0; i < f.grid.n; ++i)
    f.h[static_cast<size_t>(i)] = std::fabs(f.grid.x_at(i));
  CHECK(validate_space(f, SpaceKind::CKpz0, 1.0).pass);
  CHECK(validate_space(f, SpaceKind::V, 1.0).pass);
  CHECK_FALSE(validate_space(f, SpaceKind::V, 3.0).pass);
}

TEST_CASE("validate_space_pair counts gap monotonicity violations") {
  FieldState fm, fp;
  fm.grid = fp.grid = make_grid(10.0, 10.0, 0.1);
  fm.h.resize(static_cast<size_t>(fm.grid.n));
  fp.h.resize(static_cast<size_t>(fm.grid.n));
  for (int64_t i = 0; i < fm.grid.n; ++i) {
    const double x = fm.grid.x_at(i);
    fm.h[static_cast<size_t>(i)] = -x;
    fp.h[static_cast<size_t>(i)] = x;
  }
  SpaceReport rep = validate_space_pair(fm, fp, SpaceKind::X, 1.0);
  CHECK(rep.pass);
  CHECK(rep.monotonicity_violations == 0);
  // Flatten the gap on one cell pair: counted, and X membership fails.
  fp.h[10] = fp.h[11] - (fm.h[11] - fm.h[10]);
  rep = validate_space_pair(fm, fp, SpaceKind::X, 1.0);
  CHECK(rep.monotonicity_violations == 1);
  CHECK_FALSE(rep.pass);
  CHECK(validate_space_pair(fm, fp, SpaceKind::Y, 1.0).pass);
}

TEST_CASE("coupled state validation enforces shared grid and clock") {
  CoupledState st;
  st.h_minus.grid = st.h_plus.grid = make_grid(1.0, 1.0, 0.1);
  st.h_minus.h.assign(static_cast<size_t>(st.h_minus.grid.n), 0.0);
  st.h_plus.h = st.h_minus.h;
  CHECK_NOTHROW(st.validate());
  st.h_plus.t = 1.0;
  CHECK_THROWS(st.validate());
}
