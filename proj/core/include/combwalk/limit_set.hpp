#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace combwalk {

/// Largest first coordinate of the limit domain, 2^{1/2} 3^{-3/4}, in the
/// coordinates normalizing the backbone component by
/// 2^{3/4} n^{1/4} (loglog n)^{3/4}.
double domain_b_max();

/// Conversion between those coordinates and the plain
/// n^{1/4} (loglog n)^{3/4} normalization: multiplying domain_b_max() by
/// this 2^{3/4} factor gives the rectangle bound 2^{5/4} 3^{-3/4}.
double lil_conversion_factor();

struct DomainSpec {
  double opt_tol = 1e-12;        // bracketing tolerance of the K solvers
  int oracle_resolution = 10000;  // K-grid size of the brute-force oracle
  // Closed-set guard: membership compares inf_K F <= 1 + membership_slack,
  // admitting the K-range endpoints as attained limits.
  double membership_slack = 1e-12;
};

/// Energy functional F(B,A,K) = 3 B^{4/3} / (2^{2/3} K^{1/3}) + A^2/(1-K)
/// on magnitudes B, A >= 0 and K in [0,1]. The K-range endpoints carry the
/// continuous-limit convention: F(0,A,0) = A^2 and F(B,0,1) is the first
/// term alone; a genuinely divergent term yields +infinity.
double F_value(double B, double A, double K);

/// The unique A >= 0 with F(B,A,K) = 1 when the first term is <= 1, else 0.
double A_of_BK(double B, double K);

/// The K in [0,1] maximizing A(B,K), found by bracketed bisection of the
/// stationarity condition (the cubic of the boundary curve).
double K_of_B(double B, const DomainSpec& spec = {});

/// inf over the K-range (closure convention) of F(|u|,|v|,K). F is strictly
/// convex in K, so the stationary point is bracketed and bisected.
double d2_min_energy(double u, double v, const DomainSpec& spec = {});

/// Membership in D2: inf_K F(|u|,|v|,K) <= 1 up to the closed-set guard.
bool d2_contains(double u, double v, const DomainSpec& spec = {});

/// First-quadrant trace of the boundary of D2, from (0,1) to (b_max, 0).
struct BoundaryPolyline {
  std::vector<std::pair<double, double>> points;
};

BoundaryPolyline trace_boundary(const DomainSpec& spec, int points);

/// Four-quadrant reflection of the first-quadrant trace, ordered as a
/// single loop through quadrants I, IV, III, II.
std::vector<std::pair<double, double>> reflect_four_quadrants(
    const BoundaryPolyline& polyline);

/// Continuous piecewise-linear function on [0,1] with value(0) = 0, given
/// by its breakpoints (x strictly increasing from 0 to 1).
struct PiecewiseLinearPath {
  std::vector<std::pair<double, double>> breakpoints;

  double value(double x) const;
  void validate() const;
};

struct EnergyResult {
  double energy = 0;
  double orthogonality_violation = 0;  // Lebesgue measure of {k' != 0, g != 0}
};

/// Closed-form Strassen-class energy of a piecewise-linear pair:
/// Int_0^1 |3^{3/4} 2^{-1/2} k'(x)|^{4/3} + g'(x)^2 dx, plus the measure on
/// which the orthogonality constraint k'(x) g(x) = 0 fails.
EnergyResult strassen_energy(const PiecewiseLinearPath& k,
                             const PiecewiseLinearPath& g);

/// The two-piece example pair: k climbs linearly to B on [0,K1] then stays
/// flat; g is flat at 0 on [0,K2] then climbs linearly to A. Requires
/// 0 <= K1 <= K2 <= 1; a zero-length first piece degenerates to the
/// constant-zero path.
std::pair<PiecewiseLinearPath, PiecewiseLinearPath> example_kg(double B,
                                                               double A,
                                                               double K1,
                                                               double K2);

}  // namespace combwalk
