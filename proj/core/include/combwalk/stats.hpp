#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace combwalk {

/// Sup distance between the empirical CDF of the samples and a model CDF.
/// The input is copied and sorted internally; ties are handled by taking
/// the one-sided maxima at the first/last index of each tie group.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov statistic; tie-aware.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

double mean(std::span<const double> xs);
double variance(std::span<const double> xs);  // unbiased
double pearson_correlation(std::span<const double> xs,
                           std::span<const double> ys);

/// Fixed-resolution 2D histogram whose edge cells absorb out-of-range
/// points, so the empirical mass always sums to the sample count.
struct Histogram2D {
  int nx = 0;
  int ny = 0;
  double xmin = 0, xmax = 0;
  double ymin = 0, ymax = 0;
  std::vector<std::int64_t> counts;  // row-major, ix * ny + iy
  std::int64_t total = 0;

  Histogram2D() = default;
  Histogram2D(int nx_, int ny_, double xmin_, double xmax_, double ymin_,
              double ymax_);

  void add(double x, double y);
  int cell_x(double x) const;
  int cell_y(double y) const;
  /// Cell bounds with edge cells extended to +-infinity.
  void cell_bounds_x(int ix, double& lo, double& hi) const;
  void cell_bounds_y(int iy, double& lo, double& hi) const;
  void merge(const Histogram2D& other);
};

/// (1/2) sum_cells |count/total - model_prob|; model_probs is row-major and
/// must sum to ~1 (edge cells integrated out to infinity on the model side).
double tv_distance(const Histogram2D& hist,
                   std::span<const double> model_probs);

}  // namespace combwalk
