#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "kpzlab/rng.hpp"
#include "kpzlab/stats.hpp"

using namespace kpzlab;

TEST_CASE("distribution table: validation, interpolation, quantiles") {
  DistTable t;
  t.xs = {0.0, 1.0, 2.0};
  t.cdf = {0.0, 0.25, 1.0};
  CHECK_NOTHROW(t.validate());
  CHECK(t.cdf_at(-5.0) == 0.0);
  CHECK(t.cdf_at(5.0) == 1.0);
  CHECK(t.cdf_at(0.5) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(t.quantile(0.25) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t.quantile(0.625) == doctest::Approx(1.5).epsilon(1e-12));

  DistTable bad = t;
  bad.cdf = {0.0, 0.5, 0.4};
  CHECK_THROWS(bad.validate());
  bad = t;
  bad.xs = {0.0, 0.0, 2.0};
  CHECK_THROWS(bad.validate());
  bad = t;
  bad.cdf = {0.1, 0.5, 1.0};
  CHECK_THROWS(bad.validate());
}

TEST_CASE("KS distance: exact small cases and a calibrated draw") {
  // A point mass at the median of N(0,1) gives exactly 1/2.
  std::vector<double> at_zero(64, 0.0);
  CHECK(ks_distance(at_zero, gaussian_cdf, 0.0, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS(ks_distance(std::vector<double>(3, 0.0), gaussian_cdf, 0.0, 1.0));

  // Gaussian draws against their own law stay under the DKW-style band.
  NoiseStream s(StreamKey{31, 0, NoisePurpose::InitialData});
  std::vector<double> z;
  for (int i = 0; i < 20000; ++i) z.push_back(s.next());
  CHECK(ks_distance(z, gaussian_cdf, 0.0, 1.0) < 0.015);
  // Against the wrong variance the distance is macroscopic.
  CHECK(ks_distance(z, gaussian_cdf, 0.0, 2.0) > 0.05);

  std::vector<double> z2;
  for (int i = 0; i < 20000; ++i) z2.push_back(s.next());
  CHECK(ks_two_sample(z, z2) < 0.02);
}

TEST_CASE("embedded edge-fluctuation table has the published moments") {
  const DistTable& t = tw_goe_table();
  CHECK_NOTHROW(t.validate());
  CHECK(t.mean() == doctest::Approx(-1.2065335745820).epsilon(2e-3));
  CHECK(t.variance() == doctest::Approx(1.607781034581).epsilon(5e-3));
  CHECK(t.cdf_at(-10.0) == 0.0);
  CHECK(t.cdf_at(6.0) == 1.0);

  const DistTable& d = tw_goe_diff_table();
  CHECK_NOTHROW(d.validate());
  // Difference of two independent draws, then halved: symmetric with
  // variance half the original.
  CHECK(std::fabs(d.mean()) < 1e-3);
  CHECK(d.variance() ==
        doctest::Approx(0.5 * t.variance()).epsilon(5e-3));
  CHECK(d.cdf_at(0.0) == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("log-log fit recovers planted exponents") {
  std::vector<std::pair<double, double>> pts;
  for (double t : {1.0, 2.0, 4.0, 8.0}) pts.push_back({t, 3.0 * std::pow(t, 0.5)});
  const ScalingFit f = fit_scaling(pts);
  CHECK(f.exponent == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::exp(f.intercept) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(f.r2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS(fit_scaling({{1.0, 1.0}}));
  CHECK_THROWS(fit_scaling({{1.0, 1.0}, {2.0, -1.0}}));
}

TEST_CASE("spread statistics on known data") {
  std::vector<double> v = {1.0, 2.0, 3.0, 4.0};
  CHECK(median(v) == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(sample_variance(v) == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
  CHECK(sample_std(v) == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-14));
  CHECK(iqr(v) > 0.0);
  CHECK_THROWS(iqr({1.0, 2.0, 3.0}));
  // IQR of a big uniform sample approaches half the width.
  NoiseStream s(StreamKey{32, 0, NoisePurpose::InitialData});
  std::vector<double> u;
  for (int i = 0; i < 50000; ++i)
    u.push_back(gaussian_cdf(s.next(), 0.0, 1.0));
  CHECK(iqr(u) == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("special-function anchors") {
  CHECK(gaussian_cdf(0.0, 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(gaussian_cdf(1.959963984540054, 0.0, 1.0) ==
        doctest::Approx(0.975).epsilon(1e-12));
  CHECK(gaussian_cdf(2.0, 1.0, 4.0) ==
        doctest::Approx(gaussian_cdf(0.5, 0.0, 1.0)).epsilon(1e-12));
  // Exponential special case of the Gamma law.
  CHECK(gamma_cdf(1.0, 1.0, 1.0) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
  // Chi-square(1) route: P(Z^2 <= z) = 2 Phi(sqrt(z)) - 1.
  CHECK(gamma_cdf(0.2, 0.5, 0.5) ==
        doctest::Approx(2.0 * gaussian_cdf(std::sqrt(0.2), 0.0, 1.0) - 1.0)
            .epsilon(1e-10));
  CHECK(gamma_cdf(0.0, 2.0, 1.0) == 0.0);
  CHECK(gamma_cdf(1e9, 2.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("table CSV round-trips bitwise") {
  DistTable t;
  t.xs = {-1.0, -0.25, 0.125, 2.0};
  t.cdf = {0.0, 0.3330000000000001, 0.75, 1.0};
  const std::string path = "/tmp/kpzlab_table_roundtrip.csv";
  t.write_csv(path, {"round-trip check"});
  const DistTable back = DistTable::read_csv(path);
  REQUIRE(back.xs.size() == t.xs.size());
  for (size_t i = 0; i < t.xs.size(); ++i) {
    CHECK(back.xs[i] == t.xs[i]);
    CHECK(back.cdf[i] == t.cdf[i]);
  }
  std::remove(path.c_str());
}
