#include "combwalk/io.hpp"

#include <cstdio>

namespace combwalk {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_comb_path_csv(std::ostream& os, const CombPath& path) {
  os << "step,x,y\n";
  for (std::size_t i = 0; i < path.sites.size(); ++i) {
    os << i << ',' << path.sites[i].x << ',' << path.sites[i].y << '\n';
  }
}

void write_coupled_path_csv(std::ostream& os, const CoupledCombPath& path) {
  os << "step,x,y,phase,N\n";
  for (std::size_t i = 0; i < path.path.sites.size(); ++i) {
    const Site& s = path.path.sites[i];
    const char* phase =
        i == 0 ? "axis"
               : (path.phase[i - 1] == Phase::Axis ? "axis" : "tooth");
    std::int64_t index = i == 0 ? 0 : path.phase_index[i - 1];
    os << i << ',' << s.x << ',' << s.y << ',' << phase << ',' << index
       << '\n';
  }
}

void write_local_time_csv(std::ostream& os, const LocalTimeTable& table) {
  os << "level,count\n";
  for (std::size_t i = 0; i < table.counts.size(); ++i) {
    if (table.counts[i] == 0) continue;
    os << table.min_level + static_cast<std::int64_t>(i) << ','
       << table.counts[i] << '\n';
  }
}

void write_boundary_csv(std::ostream& os,
                        std::span<const std::pair<double, double>> points) {
  os << "u,v\n";
  for (const auto& [u, v] : points) {
    os << format_double(u) << ',' << format_double(v) << '\n';
  }
}

void write_density_table_csv(std::ostream& os,
                             std::span<const DensityTableRow> rows) {
  os << "point,density,cdf\n";
  for (const auto& r : rows) {
    os << format_double(r.point) << ',' << format_double(r.density) << ','
       << format_double(r.cdf) << '\n';
  }
}

void write_density2d_csv(std::ostream& os, const std::string& col_a,
                         const std::string& col_b,
                         std::span<const Density2DRow> rows) {
  os << col_a << ',' << col_b << ",density\n";
  for (const auto& r : rows) {
    os << format_double(r.a) << ',' << format_double(r.b) << ','
       << format_double(r.density) << '\n';
  }
}

void write_laplace_csv(std::ostream& os, std::span<const LaplaceRow> rows) {
  os << "theta,t,value\n";
  for (const auto& r : rows) {
    os << format_double(r.theta) << ',' << format_double(r.t) << ','
       << format_double(r.value) << '\n';
  }
}

void write_histogram_csv(std::ostream& os, const Histogram2D& hist,
                         std::span<const double> model_probs) {
  os << "u_lo,u_hi,z_lo,z_hi,count,empirical,model\n";
  for (int ix = 0; ix < hist.nx; ++ix) {
    for (int iy = 0; iy < hist.ny; ++iy) {
      double ulo, uhi, zlo, zhi;
      hist.cell_bounds_x(ix, ulo, uhi);
      hist.cell_bounds_y(iy, zlo, zhi);
      std::size_t c = static_cast<std::size_t>(ix) * hist.ny + iy;
      double emp = hist.total == 0
                       ? 0.0
                       : static_cast<double>(hist.counts[c]) /
                             static_cast<double>(hist.total);
      os << format_double(ulo) << ',' << format_double(uhi) << ','
         << format_double(zlo) << ',' << format_double(zhi) << ','
         << hist.counts[c] << ',' << format_double(emp) << ','
         << format_double(model_probs.empty() ? 0.0 : model_probs[c]) << '\n';
    }
  }
}

}  // namespace combwalk
