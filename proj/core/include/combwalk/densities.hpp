#pragma once

#include <span>
#include <string>
#include <vector>

#include "combwalk/quadrature.hpp"

namespace combwalk {

/// Standard normal distribution function, |error| <= a few ulp.
double std_normal_cdf(double z);

double std_normal_pdf(double z);

/// Scaled complementary error function e^{x^2} erfc(x). Evaluated as the
/// guarded product for x < 15 and by the asymptotic (Mills ratio) series
/// beyond, so it neither overflows nor loses the leading digits.
double erfcx(double x);

/// Density at u of X |Y|^{1/2} with X, Y independent standard normals:
/// (2/pi) Int_0^inf exp(-u^2/(2 v^2) - v^4/2) dv.
double dobrushin_density(double u, const QuadratureSpec& spec = {});

/// Joint density at (u,z) of (X |Y|^{1/2}, Z), where (|Y|,Z) is distributed
/// as (local time at zero, endpoint) of a Brownian motion at time 1:
/// (1/2pi) Int_0^inf ((y+|z|)/y^{1/2}) exp(-u^2/(2y) - (y+|z|)^2/2) dy.
/// The y^{-1/2} endpoint singularity is removed exactly by y = w^2.
double joint_density_uz(double u, double z, const QuadratureSpec& spec = {});

/// Joint density of (|Y|, Z): (y+|z|) exp(-(y+|z|)^2/2) / sqrt(2 pi), y >= 0.
double eta_absw_density(double y, double z);

/// E exp(-theta eta(0,t)) = 2 e^{theta^2 t/2} (1 - Phi(theta sqrt(t)))
///                        = erfcx(theta sqrt(t/2)).
double local_time_laplace(double theta, double t);

enum class DensityId { Dobrushin, JointUZ, EtaAbsW };

DensityId density_id_from_string(const std::string& name);

/// Piecewise-linear CDF cache over a point grid; feeds the KS tests.
struct CdfTable {
  std::vector<double> points;
  std::vector<double> cum;

  double eval(double x) const;
  bool non_decreasing() const;
};

/// CDF of a 1-dimensional density model along a sorted grid. The grid must
/// cover at least 6 standard-scale units on each side of the origin; the
/// left anchor integrates the tail below the first point. 2-dimensional
/// models have no 1-dimensional CDF and are rejected.
CdfTable cdf_table(DensityId id, std::span<const double> grid,
                   const QuadratureSpec& spec = {});

struct DensityModel {
  DensityId id = DensityId::Dobrushin;
  QuadratureSpec quad;
  CdfTable cdf;
};

}  // namespace combwalk
