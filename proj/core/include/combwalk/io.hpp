#pragma once

#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "combwalk/coupling.hpp"
#include "combwalk/local_time.hpp"
#include "combwalk/stats.hpp"
#include "combwalk/walk.hpp"

namespace combwalk {

/// Locale-independent float formatting with 17 significant digits, so
/// every emitted value round-trips bit-exactly.
std::string format_double(double v);

/// Header `step,x,y`, one row per step (row 0 is the origin).
void write_comb_path_csv(std::ostream& os, const CombPath& path);

/// Header `step,x,y,phase,N`; phase is `axis` or `tooth` (step 0 carries
/// the tag of the first step's phase bookkeeping start, printed as axis).
void write_coupled_path_csv(std::ostream& os, const CoupledCombPath& path);

/// Header `level,count`, levels ascending.
void write_local_time_csv(std::ostream& os, const LocalTimeTable& table);

/// Header `u,v`, the four-quadrant boundary loop.
void write_boundary_csv(std::ostream& os,
                        std::span<const std::pair<double, double>> points);

/// Header `point,density,cdf`.
struct DensityTableRow {
  double point;
  double density;
  double cdf;
};
void write_density_table_csv(std::ostream& os,
                             std::span<const DensityTableRow> rows);

/// Header `u,z,density` (or any two coordinate names).
struct Density2DRow {
  double a;
  double b;
  double density;
};
void write_density2d_csv(std::ostream& os, const std::string& col_a,
                         const std::string& col_b,
                         std::span<const Density2DRow> rows);

/// Header `theta,t,value`.
struct LaplaceRow {
  double theta;
  double t;
  double value;
};
void write_laplace_csv(std::ostream& os, std::span<const LaplaceRow> rows);

/// Header `u_lo,u_hi,z_lo,z_hi,count,empirical,model`; edge cells print
/// -inf/inf bounds.
void write_histogram_csv(std::ostream& os, const Histogram2D& hist,
                         std::span<const double> model_probs);

}  // namespace combwalk
