#include "combwalk/limit_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace combwalk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// p = B^{4/3} 2^{-2/3}; the first term of F is 3 p K^{-1/3} and B <= b_max
// is equivalent to p <= 1/3.
double p_of(double B) { return std::pow(B, 4.0 / 3.0) * std::pow(2.0, -2.0 / 3.0); }

void check_magnitudes(double B, double A) {
  if (B < 0.0 || A < 0.0) {
    throw std::invalid_argument("F is defined on magnitudes; B, A must be >= 0");
  }
}

}  // namespace

double domain_b_max() { return std::sqrt(2.0) * std::pow(3.0, -0.75); }

double lil_conversion_factor() { return std::pow(2.0, 0.75); }

double F_value(double B, double A, double K) {
  check_magnitudes(B, A);
  if (K < 0.0 || K > 1.0) {
    throw std::invalid_argument("F_value: K must lie in [0,1]");
  }
  double first;
  if (B == 0.0) {
    first = 0.0;
  } else if (K == 0.0) {
    return kInf;
  } else {
    first = 3.0 * p_of(B) / std::cbrt(K);
  }
  double second;
  if (A == 0.0) {
    second = 0.0;
  } else if (K == 1.0) {
    return kInf;
  } else {
    second = A * A / (1.0 - K);
  }
  return first + second;
}

double A_of_BK(double B, double K) {
  if (B < 0.0) throw std::invalid_argument("A_of_BK: B must be >= 0");
  if (K < 0.0 || K > 1.0) {
    throw std::invalid_argument("A_of_BK: K must lie in [0,1]");
  }
  if (K == 0.0) return B == 0.0 ? 1.0 : 0.0;
  if (K == 1.0) return 0.0;
  double first = 3.0 * p_of(B) / std::cbrt(K);
  if (first >= 1.0) return 0.0;
  return std::sqrt((1.0 - K) * (1.0 - first));
}

double K_of_B(double B, const DomainSpec& spec) {
  const double bmax = domain_b_max();
  if (B < 0.0 || B > bmax + 1e-12) {
    throw std::invalid_argument("K_of_B: B must lie in [0, 2^{1/2} 3^{-3/4}]");
  }
  if (B == 0.0) return 0.0;
  B = std::min(B, bmax);
  const double p = p_of(B);
  // d(A^2)/dK = -1 + 2 p K^{-1/3} + p K^{-4/3}, strictly decreasing in K;
  // positive where A first becomes positive (K = 27 p^3) and equal to
  // 3p - 1 <= 0 at K = 1.
  auto slope = [p](double K) {
    double c = std::cbrt(K);
    return -1.0 + 2.0 * p / c + p / (c * K);
  };
  double lo = std::min(27.0 * p * p * p, 1.0);
  double hi = 1.0;
  if (slope(lo) <= 0.0) return lo;  // only at B = b_max up to rounding
  while (hi - lo > spec.opt_tol) {
    double mid = 0.5 * (lo + hi);
    (slope(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double d2_min_energy(double u, double v, const DomainSpec& spec) {
  const double B = std::abs(u);
  const double A = std::abs(v);
  if (B == 0.0) return A * A;                     // K -> 0 limit
  if (A == 0.0) return 3.0 * p_of(B);             // K = 1 limit
  const double p = p_of(B);
  // dF/dK = -p K^{-4/3} + A^2 (1-K)^{-2}: F is strictly convex in K with a
  // unique interior stationary point.
  auto dF = [p, A](double K) {
    double c = std::cbrt(K);
    double one_m = 1.0 - K;
    return -p / (c * K) + A * A / (one_m * one_m);
  };
  double lo = spec.opt_tol * 1e-4;
  double hi = 1.0 - spec.opt_tol * 1e-4;
  if (dF(lo) >= 0.0) return F_value(B, A, lo);
  if (dF(hi) <= 0.0) return F_value(B, A, hi);
  while (hi - lo > spec.opt_tol) {
    double mid = 0.5 * (lo + hi);
    (dF(mid) < 0.0 ? lo : hi) = mid;
  }
  return F_value(B, A, 0.5 * (lo + hi));
}

bool d2_contains(double u, double v, const DomainSpec& spec) {
  return d2_min_energy(u, v, spec) <= 1.0 + spec.membership_slack;
}

BoundaryPolyline trace_boundary(const DomainSpec& spec, int points) {
  if (points < 16) {
    throw std::invalid_argument("trace_boundary: need at least 16 points");
  }
  const double bmax = domain_b_max();
  BoundaryPolyline polyline;
  polyline.points.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    double B = bmax * static_cast<double>(i) / static_cast<double>(points - 1);
    double A = A_of_BK(B, K_of_B(B, spec));
    if (!polyline.points.empty()) {
      double prev = polyline.points.back().second;
      if (A > prev + 1e-9) {
        throw std::runtime_error("trace_boundary: monotonicity violated");
      }
      A = std::min(A, prev);
    }
    polyline.points.emplace_back(B, A);
  }
  return polyline;
}

std::vector<std::pair<double, double>> reflect_four_quadrants(
    const BoundaryPolyline& polyline) {
  const auto& q1 = polyline.points;
  std::vector<std::pair<double, double>> loop;
  if (q1.empty()) return loop;
  auto neg = [](double x) { return x == 0.0 ? 0.0 : -x; };  // avoid "-0"
  loop.reserve(4 * q1.size());
  for (const auto& [u, v] : q1) loop.emplace_back(u, v);
  for (std::size_t i = q1.size() - 1; i-- > 0;) {
    loop.emplace_back(q1[i].first, neg(q1[i].second));
  }
  for (std::size_t i = 1; i < q1.size(); ++i) {
    loop.emplace_back(neg(q1[i].first), neg(q1[i].second));
  }
  for (std::size_t i = q1.size() - 1; i-- > 0;) {
    loop.emplace_back(neg(q1[i].first), q1[i].second);
  }
  return loop;
}

double PiecewiseLinearPath::value(double x) const {
  if (breakpoints.size() < 2) {
    throw std::logic_error("PiecewiseLinearPath: need >= 2 breakpoints");
  }
  if (x <= breakpoints.front().first) return breakpoints.front().second;
  if (x >= breakpoints.back().first) return breakpoints.back().second;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (x <= breakpoints[i].first) {
      auto [x0, y0] = breakpoints[i - 1];
      auto [x1, y1] = breakpoints[i];
      double t = (x - x0) / (x1 - x0);  // breakpoint x hits t = 1 exactly
      return y0 + (y1 - y0) * t;
    }
  }
  return breakpoints.back().second;
}

void PiecewiseLinearPath::validate() const {
  if (breakpoints.size() < 2) {
    throw std::invalid_argument("path needs >= 2 breakpoints");
  }
  if (breakpoints.front().first != 0.0 || breakpoints.front().second != 0.0) {
    throw std::invalid_argument("path must start at (0,0)");
  }
  if (breakpoints.back().first != 1.0) {
    throw std::invalid_argument("path must end at x = 1");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i].first > breakpoints[i - 1].first)) {
      throw std::invalid_argument("breakpoint x must be strictly increasing");
    }
  }
}

EnergyResult strassen_energy(const PiecewiseLinearPath& k,
                             const PiecewiseLinearPath& g) {
  k.validate();
  g.validate();
  const double coeff = std::pow(3.0, 0.75) / std::sqrt(2.0);

  // Common refinement of the two breakpoint sets.
  std::vector<double> xs;
  xs.reserve(k.breakpoints.size() + g.breakpoints.size());
  for (const auto& bp : k.breakpoints) xs.push_back(bp.first);
  for (const auto& bp : g.breakpoints) xs.push_back(bp.first);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  EnergyResult out;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    double x0 = xs[i - 1], x1 = xs[i];
    double dx = x1 - x0;
    double k0 = k.value(x0), k1 = k.value(x1);
    double g0 = g.value(x0), g1 = g.value(x1);
    double slope_k = (k1 - k0) / dx;
    double slope_g = (g1 - g0) / dx;
    out.energy += std::pow(std::abs(coeff * slope_k), 4.0 / 3.0) * dx;
    out.energy += slope_g * slope_g * dx;
    // g is linear on the cell: it vanishes identically iff both endpoint
    // values are zero; otherwise {g != 0} has full measure there.
    if (slope_k != 0.0 && !(g0 == 0.0 && g1 == 0.0)) {
      out.orthogonality_violation += dx;
    }
  }
  return out;
}

std::pair<PiecewiseLinearPath, PiecewiseLinearPath> example_kg(double B,
                                                               double A,
                                                               double K1,
                                                               double K2) {
  if (!(0.0 <= K1 && K1 <= K2 && K2 <= 1.0)) {
    throw std::invalid_argument("example_kg: need 0 <= K1 <= K2 <= 1");
  }
  PiecewiseLinearPath k, g;
  if (K1 == 0.0) {
    k.breakpoints = {{0.0, 0.0}, {1.0, 0.0}};  // degenerate first piece
  } else if (K1 == 1.0) {
    k.breakpoints = {{0.0, 0.0}, {1.0, B}};
  } else {
    k.breakpoints = {{0.0, 0.0}, {K1, B}, {1.0, B}};
  }
  if (K2 == 1.0) {
    g.breakpoints = {{0.0, 0.0}, {1.0, 0.0}};
  } else if (K2 == 0.0) {
    g.breakpoints = {{0.0, 0.0}, {1.0, A}};
  } else {
    g.breakpoints = {{0.0, 0.0}, {K2, 0.0}, {1.0, A}};
  }
  return {k, g};
}

}  // namespace combwalk
