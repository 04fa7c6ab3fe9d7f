#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace kpzlab {

// Tabulated CDF on a strictly increasing abscissa; endpoints within 1e-6 of
// 0 and 1. Evaluation interpolates linearly and clamps outside the range.
struct DistTable {
  std::vector<double> xs;
  std::vector<double> cdf;

  void validate() const;
  double cdf_at(double x) const;
  double quantile(double p) const;
  double mean() const;
  double variance() const;

  // CSV "x,cdf" with '#' comment lines preserved on write as provenance.
  void write_csv(const std::string& path,
                 const std::vector<std::string>& comments = {}) const;
  static DistTable read_csv(const std::string& path);
};

// Sup distance between the empirical CDF of samples and a reference.
double ks_distance(std::vector<double> samples, const DistTable& ref);
double ks_distance(std::vector<double> samples,
                   double (*ref_cdf)(double, double, double), double p1,
                   double p2);
double ks_distance_fn(std::vector<double> samples,
                      const std::function<double(double)>& ref_cdf);
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// Tracy-Widom GOE reference on [-10, 6] step 0.01, embedded at build time
// from an offline Painleve II integration (see tools/gen_tw_goe_table.py).
const DistTable& tw_goe_table();
// Law of (X1 - X2)/2 for independent GOE draws: self-convolution of the
// table's density, then the 1/2 scaling.
const DistTable& tw_goe_diff_table();

struct ScalingFit {
  double exponent = 0.0;
  double intercept = 0.0;  // fit is log s = exponent * log t + intercept
  double r2 = 0.0;
  std::vector<std::pair<double, double>> points;  // (log t, log spread)
};

// Log-log least squares of spread against t; needs >= 2 distinct t and
// positive spreads (>= 3 for a meaningful r2).
ScalingFit fit_scaling(const std::vector<std::pair<double, double>>& pairs);

// Interquartile range and standard deviation, the two spread statistics
// used by the exponent fits.
double iqr(std::vector<double> v);
double sample_std(const std::vector<double>& v);
double sample_variance(const std::vector<double>& v);
double median(std::vector<double> v);

double gaussian_cdf(double x, double mean, double var);
// Lower regularized incomplete gamma P(shape, rate*x).
double gamma_cdf(double x, double shape, double rate);

}  // namespace kpzlab
