#include "combwalk/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace combwalk {

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double f = cdf(samples[i]);
    d = std::max(d, (static_cast<double>(i) + 1.0) / n - f);
    d = std::max(d, f - static_cast<double>(i) / n);
  }
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("ks_two_sample: empty sample bank");
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() || j < b.size()) {
    double x;
    if (i < a.size() && j < b.size()) {
      x = std::min(a[i], b[j]);
    } else if (i < a.size()) {
      x = a[i];
    } else {
      x = b[j];
    }
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  return d;
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean: empty input");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("variance: need >= 2 values");
  double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / static_cast<double>(xs.size() - 1);
}

double pearson_correlation(std::span<const double> xs,
                           std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("pearson_correlation: size mismatch");
  }
  double mx = mean(xs), my = mean(ys);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

Histogram2D::Histogram2D(int nx_, int ny_, double xmin_, double xmax_,
                         double ymin_, double ymax_)
    : nx(nx_), ny(ny_), xmin(xmin_), xmax(xmax_), ymin(ymin_), ymax(ymax_) {
  if (nx <= 0 || ny <= 0 || !(xmax > xmin) || !(ymax > ymin)) {
    throw std::invalid_argument("Histogram2D: bad grid spec");
  }
  counts.assign(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny),
                0);
}

int Histogram2D::cell_x(double x) const {
  double t = (x - xmin) / (xmax - xmin) * nx;
  auto ix = static_cast<std::int64_t>(std::floor(t));
  return static_cast<int>(std::clamp<std::int64_t>(ix, 0, nx - 1));
}

int Histogram2D::cell_y(double y) const {
  double t = (y - ymin) / (ymax - ymin) * ny;
  auto iy = static_cast<std::int64_t>(std::floor(t));
  return static_cast<int>(std::clamp<std::int64_t>(iy, 0, ny - 1));
}

void Histogram2D::add(double x, double y) {
  counts[static_cast<std::size_t>(cell_x(x)) * ny + cell_y(y)] += 1;
  ++total;
}

void Histogram2D::cell_bounds_x(int ix, double& lo, double& hi) const {
  double w = (xmax - xmin) / nx;
  lo = ix == 0 ? -std::numeric_limits<double>::infinity() : xmin + ix * w;
  hi = ix == nx - 1 ? std::numeric_limits<double>::infinity()
                    : xmin + (ix + 1) * w;
}

void Histogram2D::cell_bounds_y(int iy, double& lo, double& hi) const {
  double w = (ymax - ymin) / ny;
  lo = iy == 0 ? -std::numeric_limits<double>::infinity() : ymin + iy * w;
  hi = iy == ny - 1 ? std::numeric_limits<double>::infinity()
                    : ymin + (iy + 1) * w;
}

void Histogram2D::merge(const Histogram2D& other) {
  if (other.counts.size() != counts.size()) {
    throw std::invalid_argument("Histogram2D::merge: incompatible grids");
  }
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  total += other.total;
}

double tv_distance(const Histogram2D& hist,
                   std::span<const double> model_probs) {
  if (model_probs.size() != hist.counts.size()) {
    throw std::invalid_argument("tv_distance: cell count mismatch");
  }
  if (hist.total == 0) throw std::invalid_argument("tv_distance: empty hist");
  double tv = 0.0;
  for (std::size_t i = 0; i < model_probs.size(); ++i) {
    double p_hat =
        static_cast<double>(hist.counts[i]) / static_cast<double>(hist.total);
    tv += std::abs(p_hat - model_probs[i]);
  }
  return 0.5 * tv;
}

}  // namespace combwalk
