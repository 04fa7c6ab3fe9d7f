#include "kpzlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kpzlab {

namespace detail {
// Embedded Tracy-Widom GOE CDF, generated by tools/gen_tw_goe_table.py.
extern const double kTwGoeXMin;
extern const double kTwGoeStep;
extern const int kTwGoeCount;
extern const double kTwGoeCdf[];
}  // namespace detail

void DistTable::validate() const {
  if (xs.size() != cdf.size() || xs.size() < 2)
    throw std::invalid_argument("DistTable: need >= 2 matched points");
  for (size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1]))
      throw std::invalid_argument("DistTable: xs not strictly increasing");
    if (cdf[i] < cdf[i - 1])
      throw std::invalid_argument("DistTable: cdf not nondecreasing");
  }
  if (std::fabs(cdf.front()) > 1e-6 || std::fabs(cdf.back() - 1.0) > 1e-6)
    throw std::invalid_argument("DistTable: endpoints not at 0 and 1");
}

double DistTable::cdf_at(double x) const {
  if (x <= xs.front()) return cdf.front();
  if (x >= xs.back()) return cdf.back();
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const size_t i = static_cast<size_t>(it - xs.begin());
  const double w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return cdf[i - 1] * (1.0 - w) + cdf[i] * w;
}

double DistTable::quantile(double p) const {
  if (p <= cdf.front()) return xs.front();
  if (p >= cdf.back()) return xs.back();
  const auto it = std::lower_bound(cdf.begin(), cdf.end(), p);
  size_t i = static_cast<size_t>(it - cdf.begin());
  if (i == 0) return xs.front();
  const double c0 = cdf[i - 1], c1 = cdf[i];
  if (c1 == c0) return xs[i];
  const double w = (p - c0) / (c1 - c0);
  return xs[i - 1] * (1.0 - w) + xs[i] * w;
}

double DistTable::mean() const {
  // E X = integral x dF via midpoint masses of the table increments.
  double m = 0.0;
  for (size_t i = 1; i < xs.size(); ++i)
    m += 0.5 * (xs[i] + xs[i - 1]) * (cdf[i] - cdf[i - 1]);
  return m;
}

double DistTable::variance() const {
  const double m = mean();
  double v = 0.0;
  for (size_t i = 1; i < xs.size(); ++i) {
    const double mid = 0.5 * (xs[i] + xs[i - 1]) - m;
    v += mid * mid * (cdf[i] - cdf[i - 1]);
  }
  return v;
}

void DistTable::write_csv(const std::string& path,
                          const std::vector<std::string>& comments) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("DistTable: cannot open " + path);
  for (const auto& c : comments) out << "# " << c << "\n";
  out << "x,cdf\n";
  out.precision(17);
  for (size_t i = 0; i < xs.size(); ++i) out << xs[i] << "," << cdf[i] << "\n";
}

DistTable DistTable::read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("DistTable: cannot open " + path);
  DistTable t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("x,", 0) == 0) continue;
    std::istringstream ss(line);
    double x, c;
    char comma;
    if (ss >> x >> comma >> c) {
      t.xs.push_back(x);
      t.cdf.push_back(c);
    }
  }
  t.validate();
  return t;
}

namespace {

double ks_against(std::vector<double>& samples,
                  const std::function<double(double)>& cdf) {
  if (samples.size() < 10)
    throw std::invalid_argument("ks_distance: need >= 10 samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - f));
    d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
  }
  return d;
}

}  // namespace

double ks_distance(std::vector<double> samples, const DistTable& ref) {
  return ks_against(samples, [&ref](double x) { return ref.cdf_at(x); });
}

double ks_distance(std::vector<double> samples,
                   double (*ref_cdf)(double, double, double), double p1,
                   double p2) {
  return ks_against(samples,
                    [&](double x) { return ref_cdf(x, p1, p2); });
}

double ks_distance_fn(std::vector<double> samples,
                      const std::function<double(double)>& ref_cdf) {
  return ks_against(samples, ref_cdf);
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na -
                              static_cast<double>(j) / nb));
  }
  return d;
}

const DistTable& tw_goe_table() {
  static const DistTable table = [] {
    DistTable t;
    t.xs.resize(static_cast<size_t>(detail::kTwGoeCount));
    t.cdf.resize(static_cast<size_t>(detail::kTwGoeCount));
    for (int i = 0; i < detail::kTwGoeCount; ++i) {
      t.xs[static_cast<size_t>(i)] =
          detail::kTwGoeXMin + detail::kTwGoeStep * i;
      t.cdf[static_cast<size_t>(i)] = detail::kTwGoeCdf[i];
    }
    t.validate();
    return t;
  }();
  return table;
}

const DistTable& tw_goe_diff_table() {
  static const DistTable table = [] {
    const DistTable& base = tw_goe_table();
    const size_t n = base.xs.size();
    const double dx = detail::kTwGoeStep;
    // Density by centered differences of the CDF.
    std::vector<double> pdf(n, 0.0);
    for (size_t i = 1; i + 1 < n; ++i)
      pdf[i] = (base.cdf[i + 1] - base.cdf[i - 1]) / (2.0 * dx);
    // Density of X1 - X2 on offsets k*dx, k in [-(n-1), n-1]:
    // cross-correlation of pdf with itself.
    std::vector<double> dpdf(2 * n - 1, 0.0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        dpdf[i + (n - 1) - j] += pdf[i] * pdf[j] * dx;
    // CDF by trapezoid; then scale the axis by 1/2 for (X1 - X2)/2.
    DistTable t;
    t.xs.resize(dpdf.size());
    t.cdf.resize(dpdf.size());
    double acc = 0.0;
    for (size_t k = 0; k < dpdf.size(); ++k) {
      if (k > 0) acc += 0.5 * (dpdf[k] + dpdf[k - 1]) * dx;
      t.xs[k] = 0.5 * (static_cast<double>(k) - static_cast<double>(n - 1)) * dx;
      t.cdf[k] = acc;
    }
    const double total = t.cdf.back();
    if (std::fabs(total - 1.0) > 1e-3)
      throw std::runtime_error("tw_goe_diff_table: mass error too large");
    for (auto& c : t.cdf) c /= total;
    t.cdf.front() = 0.0;
    t.cdf.back() = 1.0;
    t.validate();
    return t;
  }();
  return table;
}

ScalingFit fit_scaling(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 2)
    throw std::invalid_argument("fit_scaling: need >= 2 points");
  ScalingFit fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (const auto& [t, s] : pairs) {
    if (!(t > 0.0) || !(s > 0.0))
      throw std::invalid_argument("fit_scaling: t and spread must be > 0");
    const double lx = std::log(t);
    const double ly = std::log(s);
    fit.points.emplace_back(lx, ly);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  const double n = static_cast<double>(pairs.size());
  const double det = n * sxx - sx * sx;
  if (det <= 0.0)
    throw std::invalid_argument("fit_scaling: need distinct t values");
  fit.exponent = (n * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.exponent * sx) / n;
  const double ss_tot = syy - sy * sy / n;
  double ss_res = 0.0;
  for (const auto& [lx, ly] : fit.points) {
    const double e = ly - (fit.exponent * lx + fit.intercept);
    ss_res += e * e;
  }
  fit.r2 = ss_tot > 0.0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
  return fit;
}

double iqr(std::vector<double> v) {
  if (v.size() < 4) throw std::invalid_argument("iqr: need >= 4 values");
  std::sort(v.begin(), v.end());
  auto q = [&](double p) {
    const double pos = p * static_cast<double>(v.size() - 1);
    const size_t i = static_cast<size_t>(pos);
    const double w = pos - static_cast<double>(i);
    return i + 1 < v.size() ? v[i] * (1.0 - w) + v[i + 1] * w : v[i];
  };
  return q(0.75) - q(0.25);
}

double sample_variance(const std::vector<double>& v) {
  if (v.size() < 2)
    throw std::invalid_argument("sample_variance: need >= 2 values");
  double m = 0.0;
  for (double x : v) m += x;
  m /= static_cast<double>(v.size());
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

double sample_std(const std::vector<double>& v) {
  return std::sqrt(sample_variance(v));
}

double median(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median: empty");
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double gaussian_cdf(double x, double mean, double var) {
  if (!(var > 0.0)) throw std::invalid_argument("gaussian_cdf: var must be > 0");
  return 0.5 * std::erfc(-(x - mean) / std::sqrt(2.0 * var));
}

namespace {

// Lower regularized incomplete gamma P(a, x): series for x < a+1,
// continued fraction for the complement otherwise.
double gammp(double a, double x) {
  if (x <= 0.0) return 0.0;
  const double gln = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - gln);
  }
  // Lentz continued fraction for Q(a, x).
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  const double q = std::exp(-x + a * std::log(x) - gln) * h;
  return 1.0 - q;
}

}  // namespace

double gamma_cdf(double x, double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0))
    throw std::invalid_argument("gamma_cdf: shape and rate must be > 0");
  if (x <= 0.0) return 0.0;
  return gammp(shape, rate * x);
}

}  // namespace kpzlab
