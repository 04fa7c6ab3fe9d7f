#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "kpzlab/experiments.hpp"
#include "kpzlab/stats.hpp"

namespace kpzlab {

namespace {

constexpr double kW = 640.0, kH = 480.0;
constexpr double kMargin = 56.0;

// Minimal deterministic SVG writer: fixed canvas, fixed precision, no
// timestamps, so identical inputs give bit-identical files.
class Svg {
 public:
  Svg(double x_lo, double x_hi, double y_lo, double y_hi)
      : x_lo_(x_lo), x_hi_(x_hi), y_lo_(y_lo), y_hi_(y_hi) {
    body_.precision(6);
    body_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
          << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << " " << kH
          << "\">\n"
          << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // Axes.
    line(kMargin, kH - kMargin, kW - kMargin, kH - kMargin, "black", 1.0);
    line(kMargin, kMargin, kMargin, kH - kMargin, "black", 1.0);
  }

  double px(double x) const {
    return kMargin + (x - x_lo_) / (x_hi_ - x_lo_) * (kW - 2.0 * kMargin);
  }
  double py(double y) const {
    return kH - kMargin -
           (y - y_lo_) / (y_hi_ - y_lo_) * (kH - 2.0 * kMargin);
  }

  void line(double x1, double y1, double x2, double y2,
            const std::string& color, double width) {
    body_ << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
          << "\" y2=\"" << y2 << "\" stroke=\"" << color
          << "\" stroke-width=\"" << width << "\"/>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& pts,
                const std::string& color, double width) {
    body_ << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"" << width << "\" points=\"";
    for (const auto& [x, y] : pts) body_ << px(x) << "," << py(y) << " ";
    body_ << "\"/>\n";
  }

  void text(double x, double y, const std::string& s) {
    body_ << "<text x=\"" << x << "\" y=\"" << y
          << "\" font-family=\"monospace\" font-size=\"12\">" << s
          << "</text>\n";
  }

  void labels(const std::string& title, const std::string& x_name,
              const std::string& y_name) {
    text(kMargin, kMargin - 16.0, title);
    text(kW / 2.0 - 40.0, kH - 16.0, x_name);
    text(8.0, kMargin - 32.0, y_name);
    std::ostringstream lo, hi;
    lo.precision(4);
    hi.precision(4);
    lo << x_lo_ << " .. " << x_hi_;
    text(kMargin, kH - kMargin + 20.0, lo.str());
    hi << y_lo_ << " .. " << y_hi_;
    text(kMargin + 4.0, kH - kMargin - 6.0, hi.str());
  }

  void save(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit_plots: cannot write " + path);
    out << body_.str() << "</svg>\n";
  }

 private:
  double x_lo_, x_hi_, y_lo_, y_hi_;
  std::ostringstream body_;
};

void plot_cdf_overlay(const EnsembleResult& r, const std::string& dir) {
  const size_t last = r.config.times.size() - 1;
  std::vector<double> v;
  for (const auto& row : r.records) v.push_back(row[last].j0);
  std::sort(v.begin(), v.end());
  const double mean = [&] {
    double m = 0;
    for (double x : v) m += x;
    return m / static_cast<double>(v.size());
  }();
  const double var = sample_variance(v);

  Svg svg(v.front(), v.back(), 0.0, 1.0);
  std::vector<std::pair<double, double>> ecdf;
  for (size_t i = 0; i < v.size(); ++i)
    ecdf.emplace_back(v[i],
                      static_cast<double>(i + 1) / static_cast<double>(v.size()));
  svg.polyline(ecdf, "steelblue", 1.5);
  std::vector<std::pair<double, double>> ref;
  for (int k = 0; k <= 200; ++k) {
    const double x = v.front() + (v.back() - v.front()) * k / 200.0;
    ref.emplace_back(x, gaussian_cdf(x, mean, var));
  }
  svg.polyline(ref, "crimson", 1.0);
  svg.labels("origin gap empirical CDF vs matched Gaussian (t = " +
                 std::to_string(r.config.times[last]) + ")",
             "J0", "CDF");
  svg.save(dir + "/cdf_overlay.svg");
}

void plot_scaling(const EnsembleResult& r, const std::string& dir) {
  const ScalingFit& fit = *r.fit_j0;
  double x_lo = fit.points.front().first, x_hi = x_lo;
  double y_lo = fit.points.front().second, y_hi = y_lo;
  for (const auto& [x, y] : fit.points) {
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
  }
  const double pad_x = 0.1 * (x_hi - x_lo) + 1e-9;
  const double pad_y = 0.1 * (y_hi - y_lo) + 1e-9;
  Svg svg(x_lo - pad_x, x_hi + pad_x, y_lo - pad_y, y_hi + pad_y);
  std::vector<std::pair<double, double>> fitline = {
      {x_lo, fit.exponent * x_lo + fit.intercept},
      {x_hi, fit.exponent * x_hi + fit.intercept}};
  svg.polyline(fitline, "crimson", 1.0);
  for (const auto& [x, y] : fit.points)
    svg.line(svg.px(x) - 3, svg.py(y) - 3, svg.px(x) + 3, svg.py(y) + 3,
             "steelblue", 2.0);
  std::ostringstream title;
  title.precision(4);
  title << "spread scaling fit: exponent " << fit.exponent << ", r2 "
        << fit.r2;
  svg.labels(title.str(), "log t", "log spread");
  svg.save(dir + "/scaling_fit.svg");
}

void plot_traces(const EnsembleResult& r, const std::string& dir) {
  double b_lo = 0.0, b_hi = 0.0;
  for (const auto& row : r.records)
    for (const auto& rec : row) {
      b_lo = std::min(b_lo, rec.b);
      b_hi = std::max(b_hi, rec.b);
    }
  if (b_hi == b_lo) b_hi = b_lo + 1.0;
  Svg svg(0.0, r.config.times.back(), b_lo, b_hi);
  const size_t shown = std::min<size_t>(r.records.size(), 50);
  for (size_t i = 0; i < shown; ++i) {
    std::vector<std::pair<double, double>> pts = {{0.0, r.records[i][0].b}};
    pts.clear();
    for (const auto& rec : r.records[i]) pts.emplace_back(rec.t, rec.b);
    svg.polyline(pts, i % 2 == 0 ? "steelblue" : "darkseagreen", 0.8);
  }
  svg.labels("shock location traces (" + std::to_string(shown) +
                 " replicas shown)",
             "t", "b");
  svg.save(dir + "/shock_traces.svg");
}

void plot_extra_ecdf(const EnsembleResult& r, const std::string& dir) {
  std::vector<double> v;
  for (const auto& row : r.extra) v.push_back(row.front());
  std::sort(v.begin(), v.end());
  double lo = v.front(), hi = v.back();
  if (hi == lo) hi = lo + 1.0;
  Svg svg(lo, hi, 0.0, 1.0);
  std::vector<std::pair<double, double>> ecdf;
  for (size_t i = 0; i < v.size(); ++i)
    ecdf.emplace_back(v[i],
                      static_cast<double>(i + 1) / static_cast<double>(v.size()));
  svg.polyline(ecdf, "steelblue", 1.5);
  svg.labels("empirical CDF of " + r.extra_columns.front(),
             r.extra_columns.front(), "CDF");
  svg.save(dir + "/series_ecdf.svg");
}

}  // namespace

void emit_plots(const EnsembleResult& result, const std::string& dir) {
  if (result.records.empty() && result.extra.empty())
    throw std::invalid_argument("emit_plots: empty ensemble");
  std::filesystem::create_directories(dir);
  if (!result.records.empty()) {
    plot_traces(result, dir);
    if (result.records.size() >= 2) plot_cdf_overlay(result, dir);
    if (result.fit_j0) plot_scaling(result, dir);
  }
  if (!result.extra.empty() && result.extra.size() >= 2 &&
      !result.extra_columns.empty())
    plot_extra_ecdf(result, dir);
}

}  // namespace kpzlab
