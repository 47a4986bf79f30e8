#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "combwalk/densities.hpp"
#include "combwalk/quadrature.hpp"

using namespace combwalk;

namespace {

// Independent oracle for Phi on |z| <= 3: Taylor series of erf.
double phi_oracle(double z) {
  double x = z / std::numbers::sqrt2;
  double term = x;
  double sum = x;
  for (int k = 1; k < 80; ++k) {
    term *= -x * x / static_cast<double>(k);
    sum += term / static_cast<double>(2 * k + 1);
  }
  return 0.5 + sum / std::sqrt(std::numbers::pi);
}

// Independent oracle for erfcx at x >= 4: Laplace continued fraction
// erfcx(x) = (1/sqrt(pi)) / (x + (1/2)/(x + 1/(x + (3/2)/(x + 2/(x + ...))))).
double erfcx_cf_oracle(double x) {
  double f = 0.0;
  for (int k = 60; k >= 1; --k) {
    f = (0.5 * k) / (x + f);
  }
  return 1.0 / ((x + f) * std::sqrt(std::numbers::pi));
}

}  // namespace

TEST_CASE("standard normal CDF against the series oracle") {
  CHECK(std_normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(std_normal_cdf(1.0) - 0.8413447460685429) < 1e-12);
  for (double z : {-3.0, -1.7, -0.4, 0.3, 1.0, 2.2, 3.0}) {
    CHECK(std::abs(std_normal_cdf(z) - phi_oracle(z)) < 1e-12);
  }
  for (double z : {0.5, 1.0, 3.0}) {
    CHECK(std_normal_cdf(z) + std_normal_cdf(-z) ==
          doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("erfcx agrees with the continued-fraction oracle on both branches") {
  for (double x : {4.0, 8.0, 14.9, 15.0, 15.1, 20.0, 40.0, 100.0, 2000.0}) {
    double ref = erfcx_cf_oracle(x);
    CHECK(std::abs(erfcx(x) / ref - 1.0) < 1e-12);
  }
  CHECK(erfcx(0.0) == doctest::Approx(1.0));
}

TEST_CASE("local-time Laplace transform values") {
  // 2 e^{1/2} (1 - Phi(1)), evaluated directly.
  CHECK(std::abs(local_time_laplace(1.0, 1.0) - 0.5231565837302467) < 1e-9);
  // theta -> 0+ limit.
  CHECK(local_time_laplace(1e-14, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  // Mills-ratio regime: c/(theta sqrt(t)) with c = sqrt(2/pi).
  double asym = std::sqrt(2.0 / std::numbers::pi) / 100.0;
  CHECK(std::abs(local_time_laplace(100.0, 1.0) - asym) < 1e-6);
  // Relative accuracy across the branch switch and scaled horizons.
  for (double theta : {0.3, 1.0, 5.0, 21.0, 22.0, 50.0, 300.0}) {
    for (double t : {0.25, 1.0, 9.0}) {
      double ref = erfcx_cf_oracle(theta * std::sqrt(0.5 * t));
      if (theta * std::sqrt(0.5 * t) < 4.0) continue;  // oracle needs x >= 4
      CHECK(std::abs(local_time_laplace(theta, t) / ref - 1.0) < 1e-10);
    }
  }
  CHECK_THROWS_AS(local_time_laplace(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(local_time_laplace(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("Dobrushin density: center value, symmetry, normalization") {
  // Closed form at zero: 2^{1/4} Gamma(1/4) / (2 pi).
  CHECK(std::abs(dobrushin_density(0.0) - 0.6862126275593262) < 1e-8);
  for (double u : {0.3, 1.0, 2.5}) {
    CHECK(dobrushin_density(u) == dobrushin_density(-u));
    CHECK(dobrushin_density(u) >= 0.0);
  }
  QuadratureSpec outer;
  outer.abs_tol = 1e-9;
  QuadratureSpec inner;
  inner.abs_tol = 1e-12;
  double total = integrate_or_throw(
      [&inner](double u) { return dobrushin_density(u, inner); }, -16.0, 16.0,
      outer, "dobrushin normalization");
  CHECK(std::abs(total - 1.0) < 1e-8);
}

TEST_CASE("joint (U,Z) density: symmetry, z-marginal, consistency") {
  double p = joint_density_uz(0.7, 1.2);
  CHECK(joint_density_uz(-0.7, 1.2) == p);
  CHECK(joint_density_uz(0.7, -1.2) == p);
  CHECK(joint_density_uz(-0.7, -1.2) == p);

  // Integrating out u at fixed z leaves the standard normal density.
  QuadratureSpec marginal;
  marginal.abs_tol = 1e-8;
  QuadratureSpec inner;
  inner.abs_tol = 1e-11;
  for (double z : {0.0, 1.0}) {
    double m = integrate_or_throw(
        [&inner, z](double u) { return joint_density_uz(u, z, inner); }, -12.0,
        12.0, marginal, "u-marginal");
    CHECK(std::abs(m - std_normal_pdf(z)) < 1e-6);
  }
  // Integrating out z recovers the Dobrushin density.
  for (double u : {0.0, 1.0}) {
    double m = integrate_or_throw(
        [&inner, u](double z) { return joint_density_uz(u, z, inner); }, -12.0,
        12.0, marginal, "z-integral");
    CHECK(std::abs(m - dobrushin_density(u)) < 1e-5);
  }
}

TEST_CASE("(|Y|,Z) density: zero at origin, spot value, normalization") {
  CHECK(eta_absw_density(0.0, 0.0) == doctest::Approx(0.0));
  CHECK(std::abs(eta_absw_density(1.0, 0.0) - 0.24197072451914337) < 1e-12);
  CHECK_THROWS_AS(eta_absw_density(-0.1, 0.0), std::invalid_argument);

  QuadratureSpec outer;
  outer.abs_tol = 1e-10;
  QuadratureSpec mid;
  mid.abs_tol = 1e-12;
  double total = integrate_or_throw(
      [&mid](double z) {
        return integrate_or_throw(
            [z](double y) { return eta_absw_density(y, z); }, 0.0, 14.0, mid,
            "eta y-integral");
      },
      -14.0, 14.0, outer, "eta normalization");
  CHECK(std::abs(total - 1.0) < 1e-8);
}

TEST_CASE("cdf_table: anchoring, monotonicity, rejection of 2D models") {
  std::vector<double> grid;
  for (double x = -8.0; x <= 8.0 + 1e-12; x += 1.0 / 64.0) grid.push_back(x);
  CdfTable table = cdf_table(DensityId::Dobrushin, grid);
  CHECK(table.non_decreasing());
  CHECK(std::abs(table.eval(0.0) - 0.5) < 1e-6);
  CHECK(std::abs(table.cum.back() - 1.0) < 1e-6);
  CHECK(table.cum.front() < 1e-6);
  // Interpolation is clamped outside the grid.
  CHECK(table.eval(-100.0) == doctest::Approx(table.cum.front()));
  CHECK(table.eval(100.0) == doctest::Approx(table.cum.back()));

  CHECK_THROWS_AS(cdf_table(DensityId::JointUZ, grid), std::invalid_argument);
  std::vector<double> narrow = {-1.0, 0.0, 1.0};
  CHECK_THROWS_AS(cdf_table(DensityId::Dobrushin, narrow),
                  std::invalid_argument);
  std::vector<double> unsorted = {-7.0, -7.5, 0.0, 7.0};
  CHECK_THROWS_AS(cdf_table(DensityId::Dobrushin, unsorted),
                  std::invalid_argument);
}

TEST_CASE("non-convergence is reported with the achieved error estimate") {
  QuadratureSpec starved;
  starved.abs_tol = 1e-300;
  starved.rel_tol = 1e-300;
  starved.max_subdivisions = 2;
  bool thrown = false;
  try {
    integrate_or_throw([](double x) { return std::sin(1.0 / (x + 1e-3)); },
                       0.0, 1.0, starved, "starved");
  } catch (const QuadratureError& e) {
    thrown = true;
    CHECK(e.result().error > 0.0);
    CHECK(!e.result().converged);
    CHECK(std::string(e.what()).find("error estimate") != std::string::npos);
  }
  CHECK(thrown);
}

TEST_CASE("quadrature engine on closed forms") {
  QuadratureSpec spec;
  spec.abs_tol = 1e-12;
  double v = integrate_or_throw([](double x) { return std::sin(x); }, 0.0,
                                std::numbers::pi, spec, "sin");
  CHECK(std::abs(v - 2.0) < 1e-11);
  // Gaussian over a wide window.
  double g = integrate_or_throw([](double x) { return std_normal_pdf(x); },
                                -10.0, 10.0, spec, "gauss");
  CHECK(std::abs(g - 1.0) < 1e-11);
  QuadResult r = integrate_gk15([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 1.0 / 3.0) < 1e-12);
}
