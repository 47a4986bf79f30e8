#include "combwalk/densities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace combwalk {

double std_normal_cdf(double z) {
  return 0.5 * std::erfc(-z * std::numbers::sqrt2 / 2.0);
}

double std_normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

double erfcx(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) {
    // erfcx(-x) = 2 e^{x^2} - erfcx(x); overflows for x << -26 as erfcx does.
    return 2.0 * std::exp(x * x) - erfcx(-x);
  }
  if (x < 15.0) {
    return std::exp(x * x) * std::erfc(x);
  }
  // Asymptotic series 1/(x sqrt(pi)) sum_k (-1)^k (2k-1)!!/(2x^2)^k; terms
  // fall below 1e-18 long before the divergent turnaround for x >= 15.
  const double inv2x2 = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 24; ++k) {
    term *= -static_cast<double>(2 * k - 1) * inv2x2;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum / (x * std::sqrt(std::numbers::pi));
}

namespace {

// Truncation radius r with e^{-r^4/2} below the discarded-tail budget.
double quartic_tail_radius(double budget) {
  double b = std::max(budget, 1e-300);
  return std::pow(2.0 * std::log(1.0 / b), 0.25);
}

}  // namespace

double dobrushin_density(double u, const QuadratureSpec& spec) {
  const double u2 = u * u;
  const double tail_budget = spec.abs_tol * spec.tail_fraction;
  // The integrand is dominated by e^{-v^4/2}; also keep the saddle at
  // v = (u^2/2)^{1/6} well inside the window.
  double radius = std::max(quartic_tail_radius(tail_budget),
                           std::pow(0.5 * u2, 1.0 / 6.0) + 2.0);
  auto integrand = [u2](double v) {
    if (v <= 0.0) return u2 == 0.0 ? 1.0 : 0.0;
    return std::exp(-u2 / (2.0 * v * v) - 0.5 * v * v * v * v);
  };
  QuadratureSpec inner = spec;
  inner.abs_tol = spec.abs_tol * std::numbers::pi / 2.0 * 0.5;
  double integral = integrate_or_throw(integrand, 0.0, radius, inner,
                                       "dobrushin_density");
  return 2.0 / std::numbers::pi * integral;
}

double joint_density_uz(double u, double z, const QuadratureSpec& spec) {
  const double u2 = u * u;
  const double az = std::abs(z);
  const double tail_budget = spec.abs_tol * spec.tail_fraction;
  // After y = w^2 the integrand is (1/pi)(w^2+|z|) e^{-u^2/(2w^2)-(w^2+|z|)^2/2},
  // dominated by (w^2+|z|) e^{-w^4/2}.
  double radius =
      std::max({quartic_tail_radius(tail_budget / (1.0 + az)) + 0.5,
                std::pow(0.5 * u2, 1.0 / 6.0) + 2.0, 2.5});
  auto integrand = [u2, az](double w) {
    if (w <= 0.0) return 0.0;
    double s = w * w + az;
    return s * std::exp(-u2 / (2.0 * w * w) - 0.5 * s * s);
  };
  QuadratureSpec inner = spec;
  inner.abs_tol = spec.abs_tol * std::numbers::pi * 0.5;
  double integral =
      integrate_or_throw(integrand, 0.0, radius, inner, "joint_density_uz");
  return integral / std::numbers::pi;
}

double eta_absw_density(double y, double z) {
  if (y < 0.0) {
    throw std::invalid_argument("eta_absw_density: y must be >= 0");
  }
  double s = y + std::abs(z);
  return s * std::exp(-0.5 * s * s) / std::sqrt(2.0 * std::numbers::pi);
}

double local_time_laplace(double theta, double t) {
  if (theta < 0.0 || t <= 0.0) {
    throw std::invalid_argument("local_time_laplace: need theta >= 0, t > 0");
  }
  return erfcx(theta * std::sqrt(0.5 * t));
}

DensityId density_id_from_string(const std::string& name) {
  if (name == "dobrushin") return DensityId::Dobrushin;
  if (name == "joint-uz") return DensityId::JointUZ;
  if (name == "eta-abs-w") return DensityId::EtaAbsW;
  throw std::invalid_argument("unknown density model: " + name);
}

double CdfTable::eval(double x) const {
  if (points.empty()) throw std::logic_error("CdfTable: empty table");
  if (x <= points.front()) return cum.front();
  if (x >= points.back()) return cum.back();
  auto it = std::upper_bound(points.begin(), points.end(), x);
  std::size_t i = static_cast<std::size_t>(it - points.begin());
  double x0 = points[i - 1], x1 = points[i];
  double t = (x - x0) / (x1 - x0);
  return cum[i - 1] + t * (cum[i] - cum[i - 1]);
}

bool CdfTable::non_decreasing() const {
  for (std::size_t i = 1; i < cum.size(); ++i) {
    if (cum[i] < cum[i - 1]) return false;
  }
  return true;
}

CdfTable cdf_table(DensityId id, std::span<const double> grid,
                   const QuadratureSpec& spec) {
  if (id != DensityId::Dobrushin) {
    throw std::invalid_argument(
        "cdf_table: only the 1-dimensional Dobrushin model has a CDF table");
  }
  if (grid.size() < 2) throw std::invalid_argument("cdf_table: grid too small");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("cdf_table: grid must be strictly increasing");
    }
  }
  if (grid.front() > -6.0 || grid.back() < 6.0) {
    throw std::invalid_argument(
        "cdf_table: grid must cover >= 6 standard-scale units each side");
  }

  QuadratureSpec cell_spec = spec;
  cell_spec.abs_tol = std::min(spec.abs_tol, 1e-10);
  auto density = [&spec](double u) { return dobrushin_density(u, spec); };

  CdfTable table;
  table.points.assign(grid.begin(), grid.end());
  table.cum.resize(grid.size());
  // Left anchor: the tail mass below the first grid point.
  double anchor = integrate_or_throw(density, grid.front() - 8.0, grid.front(),
                                     cell_spec, "cdf_table anchor");
  table.cum[0] = anchor;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    double cell = integrate_or_throw(density, grid[i - 1], grid[i], cell_spec,
                                     "cdf_table cell");
    table.cum[i] = table.cum[i - 1] + cell;
  }

  if (!table.non_decreasing()) {
    throw std::runtime_error("cdf_table: non-monotone numerical CDF");
  }
  return table;
}

}  // namespace combwalk
