#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "combwalk/coupling.hpp"
#include "combwalk/densities.hpp"
#include "combwalk/experiments.hpp"
#include "combwalk/io.hpp"
#include "combwalk/limit_set.hpp"
#include "combwalk/parallel.hpp"
#include "combwalk/walk.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGatedFailure = 3;

struct CommonOptions {
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = all hardware threads
  std::string out = ".";
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--seed", common.seed, "Base seed (u64)")->capture_default_str();
  cmd->add_option("--threads", common.threads,
                  "Worker threads (0 = all cores); never changes output bytes")
      ->capture_default_str();
  cmd->add_option("--out", common.out, "Output directory")->capture_default_str();
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void apply_env_seed(CommonOptions& common) {
  const char* env = std::getenv("COMBWALK_SEED");
  if (env == nullptr) return;
  std::string s(env);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("COMBWALK_SEED is not a valid u64: " + s);
  }
  common.seed = value;
}

std::ofstream open_output(const CommonOptions& common, const std::string& name) {
  fs::create_directories(common.out);
  fs::path p = fs::path(common.out) / name;
  std::ofstream os(p, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + p.string());
  return os;
}

std::vector<double> parse_grid(const std::string& spec) {
  // "a:b:step", inclusive of b up to rounding.
  double a, b, step;
  char c1, c2;
  std::istringstream in(spec);
  if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' ||
      step <= 0.0 || b < a || !(in >> std::ws).eof()) {
    throw std::invalid_argument("malformed grid spec (want a:b:step): " + spec);
  }
  auto count = static_cast<std::int64_t>(std::floor((b - a) / step + 0.5)) + 1;
  if (count > 10000000) {
    throw std::invalid_argument("grid spec yields too many points: " + spec);
  }
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    grid.push_back(a + static_cast<double>(i) * step);
  }
  return grid;
}

int cmd_simulate(const CommonOptions& common, std::int64_t n, bool coupled) {
  using namespace combwalk;
  if (coupled) {
    CoupledCombPath path =
        sample_coupled_comb_path(n, RngStream(common.seed, 101));
    if (common.format == "csv") {
      auto os = open_output(common, "path.csv");
      write_coupled_path_csv(os, path);
    } else {
      ordered_json j;
      j["steps"] = n;
      j["coupled"] = true;
      ordered_json sites = ordered_json::array();
      for (const auto& s : path.path.sites) sites.push_back({s.x, s.y});
      j["sites"] = sites;
      ordered_json phases = ordered_json::array();
      for (std::size_t i = 0; i < path.phase.size(); ++i) {
        phases.push_back(path.phase[i] == Phase::Axis ? "axis" : "tooth");
      }
      j["phase"] = phases;
      j["N"] = path.phase_index;
      open_output(common, "path.json") << j.dump(2) << "\n";
    }
    Site end = path.path.endpoint();
    std::int64_t on_axis = 0;
    for (std::size_t i = 1; i < path.path.sites.size(); ++i) {
      if (path.path.sites[i].y == 0) ++on_axis;
    }
    std::cout << "coupled path: steps=" << n << " endpoint=(" << end.x << ","
              << end.y << ") phases=" << path.schedule.rho2.returns()
              << " axis_occupation="
              << combwalk::format_double(
                     n == 0 ? 0.0
                            : static_cast<double>(on_axis) /
                                  static_cast<double>(n))
              << "\n";
  } else {
    RngStream rng(common.seed, 100);
    CombPath path = sample_comb_path(n, rng);
    if (common.format == "csv") {
      auto os = open_output(common, "path.csv");
      write_comb_path_csv(os, path);
    } else {
      ordered_json j;
      j["steps"] = n;
      j["coupled"] = false;
      ordered_json sites = ordered_json::array();
      for (const auto& s : path.sites) sites.push_back({s.x, s.y});
      j["sites"] = sites;
      open_output(common, "path.json") << j.dump(2) << "\n";
    }
    Site end = path.endpoint();
    std::int64_t on_axis = 0;
    for (std::size_t i = 1; i < path.sites.size(); ++i) {
      if (path.sites[i].y == 0) ++on_axis;
    }
    std::cout << "path: steps=" << n << " endpoint=(" << end.x << "," << end.y
              << ") axis_occupation="
              << combwalk::format_double(
                     n == 0 ? 0.0
                            : static_cast<double>(on_axis) /
                                  static_cast<double>(n))
              << "\n";
  }
  return kExitOk;
}

int cmd_density(const CommonOptions& common, const std::string& model,
                const std::string& grid_spec, const std::string& grid2_spec,
                const std::vector<double>& thetas, double t) {
  using namespace combwalk;
  if (model == "laplace") {
    std::vector<LaplaceRow> rows;
    for (double theta : thetas) {
      double value = local_time_laplace(theta, t);
      rows.push_back({theta, t, value});
      std::cout << "laplace(theta=" << format_double(theta)
                << ", t=" << format_double(t) << ") = " << format_double(value)
                << "\n";
    }
    if (common.format == "csv") {
      auto os = open_output(common, "density_laplace.csv");
      write_laplace_csv(os, rows);
    } else {
      ordered_json j = ordered_json::array();
      for (const auto& r : rows) {
        j.push_back({{"theta", r.theta}, {"t", r.t}, {"value", r.value}});
      }
      open_output(common, "density_laplace.json") << j.dump(2) << "\n";
    }
    return kExitOk;
  }

  DensityId id = density_id_from_string(model);  // throws on unknown model
  std::vector<double> grid = parse_grid(grid_spec);
  if (id == DensityId::Dobrushin) {
    // The cdf column is the cumulative mass of the tabulated window,
    // normalized to end at 1 (see FORMATS.md).
    std::vector<DensityTableRow> rows;
    rows.reserve(grid.size());
    QuadratureSpec spec;
    double cum = 0.0;
    double prev_x = 0.0, prev_f = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      double f = dobrushin_density(grid[i], spec);
      if (i > 0) cum += 0.5 * (prev_f + f) * (grid[i] - prev_x);
      rows.push_back({grid[i], f, cum});
      prev_x = grid[i];
      prev_f = f;
    }
    if (cum > 0.0) {
      for (auto& r : rows) r.cdf /= cum;
    }
    if (common.format == "csv") {
      auto os = open_output(common, "density_dobrushin.csv");
      write_density_table_csv(os, rows);
    } else {
      ordered_json j = ordered_json::array();
      for (const auto& r : rows) {
        j.push_back(
            {{"point", r.point}, {"density", r.density}, {"cdf", r.cdf}});
      }
      open_output(common, "density_dobrushin.json") << j.dump(2) << "\n";
    }
    return kExitOk;
  }

  // 2-dimensional models: grid x grid2 table of density values.
  std::vector<double> grid2 = parse_grid(grid2_spec.empty() ? grid_spec
                                                            : grid2_spec);
  std::vector<Density2DRow> rows;
  rows.reserve(grid.size() * grid2.size());
  QuadratureSpec spec;
  for (double a : grid) {
    for (double b : grid2) {
      double value;
      if (id == DensityId::JointUZ) {
        value = joint_density_uz(a, b, spec);
      } else {
        if (a < 0.0) continue;  // eta-abs-w lives on y >= 0
        value = eta_absw_density(a, b);
      }
      rows.push_back({a, b, value});
    }
  }
  std::string stem =
      id == DensityId::JointUZ ? "density_joint_uz" : "density_eta_abs_w";
  std::string col_a = id == DensityId::JointUZ ? "u" : "y";
  if (common.format == "csv") {
    auto os = open_output(common, stem + ".csv");
    write_density2d_csv(os, col_a, "z", rows);
  } else {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
      j.push_back({{col_a, r.a}, {"z", r.b}, {"density", r.density}});
    }
    open_output(common, stem + ".json") << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_domain(const CommonOptions& common, bool trace, int points,
               const std::vector<double>& query) {
  using namespace combwalk;
  if (!trace && query.empty()) {
    throw std::invalid_argument("domain: need --trace or --query U V");
  }
  if (trace) {
    DomainSpec spec;
    BoundaryPolyline polyline = trace_boundary(spec, points);
    auto loop = reflect_four_quadrants(polyline);
    if (common.format == "csv") {
      auto os = open_output(common, "domain_boundary.csv");
      write_boundary_csv(os, loop);
    } else {
      ordered_json j = ordered_json::array();
      for (const auto& [u, v] : loop) j.push_back({u, v});
      open_output(common, "domain_boundary.json") << j.dump(2) << "\n";
    }
    std::cout << "boundary: " << loop.size() << " points, first-quadrant from ("
              << format_double(polyline.points.front().first) << ","
              << format_double(polyline.points.front().second) << ") to ("
              << format_double(polyline.points.back().first) << ","
              << format_double(polyline.points.back().second) << ")\n";
  }
  if (!query.empty()) {
    if (query.size() != 2) {
      throw std::invalid_argument("domain: --query takes exactly U V");
    }
    bool inside = d2_contains(query[0], query[1]);
    std::cout << (inside ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_experiment(const CommonOptions& common, const std::string& id,
                   std::optional<std::int64_t> n,
                   std::optional<std::int64_t> replicas,
                   std::optional<std::int64_t> n_max,
                   const std::vector<double>& thetas) {
  using namespace combwalk;
  ExperimentPlan plan = default_plan(id);  // throws on unknown id
  plan.seed = common.seed;
  plan.threads = common.threads;
  if (n) plan.n = *n;
  if (replicas) plan.replicas = *replicas;
  if (n_max) plan.n_max = *n_max;
  if (!thetas.empty()) plan.thetas = thetas;

  ExperimentArtifacts artifacts;
  TestReport report = run_experiment(plan, &artifacts);

  std::string stem = "report_" + id;
  for (auto& c : stem) {
    if (c == '-') c = '_';
  }
  open_output(common, stem + ".json") << report.to_json();

  if (id == "joint") {
    auto os = open_output(common, "histogram_joint.csv");
    write_histogram_csv(os, artifacts.joint_hist,
                        artifacts.joint_model_probs);
  } else if (id == "lil") {
    auto os = open_output(common, "lil_series.csv");
    os << "n,c1_stat,c1_stat_strassen,c2_stat,c1_running_sup,c2_running_sup,"
          "c1_abs_running_sup,c2_abs_running_sup\n";
    for (const auto& row : artifacts.lil_series) {
      os << row.n << ',' << format_double(row.c1_stat) << ','
         << format_double(row.c1_stat_strassen) << ','
         << format_double(row.c2_stat) << ','
         << format_double(row.c1_running_sup) << ','
         << format_double(row.c2_running_sup) << ','
         << format_double(row.c1_abs_running_sup) << ','
         << format_double(row.c2_abs_running_sup) << '\n';
    }
  } else if (id == "chung-hirsch") {
    auto os = open_output(common, "chung_hirsch_series.csv");
    os << "n,chung_stat,chung_running_inf";
    const auto& presets = beta_presets();
    for (std::size_t j = 0; j < presets.size(); ++j) {
      os << ",hirsch_one_sided_" << j << ",hirsch_one_sided_inf_" << j
         << ",hirsch_abs_" << j << ",hirsch_abs_inf_" << j;
    }
    os << '\n';
    for (const auto& row : artifacts.chung_series) {
      os << row.n << ',' << format_double(row.chung_stat) << ','
         << format_double(row.chung_running_inf);
      for (std::size_t j = 0; j < presets.size(); ++j) {
        os << ',' << format_double(row.hirsch_one_sided[j]) << ','
           << format_double(row.hirsch_one_sided_inf[j]) << ','
           << format_double(row.hirsch_abs[j]) << ','
           << format_double(row.hirsch_abs_inf[j]);
      }
      os << '\n';
    }
  }

  for (const auto& s : report.statistics) {
    std::cout << (s.gated ? (s.pass ? "[pass] " : "[FAIL] ") : "[info] ")
              << s.name << " = " << format_double(s.value);
    if (s.gated) std::cout << " (tolerance " << format_double(s.tolerance) << ")";
    std::cout << "\n";
  }
  std::cout << "report: " << stem << ".json (duration " << report.duration_ms
            << " ms)\n";
  return report.all_gated_pass() ? kExitOk : kExitGatedFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulation and numerical verification for the simple random "
               "walk on the 2-dimensional comb lattice"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* simulate = app.add_subcommand("simulate", "Sample a comb path");
  std::int64_t sim_n = 0;
  bool coupled = false;
  simulate->add_option("--n", sim_n, "Number of steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  simulate->add_flag("--coupled", coupled,
                     "Use the two-walk coupling construction");
  add_common(simulate, common);

  auto* density = app.add_subcommand("density", "Evaluate limiting densities");
  std::string model;
  std::string grid_spec = "-4:4:0.01";
  std::string grid2_spec;
  std::vector<double> thetas;
  double laplace_t = 1.0;
  density->add_option("--model", model,
                      "dobrushin | joint-uz | eta-abs-w | laplace")
      ->required();
  density->add_option("--grid", grid_spec, "Grid a:b:step (first axis)")
      ->capture_default_str();
  density->add_option("--grid2", grid2_spec, "Grid a:b:step (second axis)");
  density->add_option("--theta", thetas, "Laplace exponents (repeatable)");
  density->add_option("--t", laplace_t, "Laplace time horizon")
      ->capture_default_str();
  add_common(density, common);

  auto* domain = app.add_subcommand("domain", "Limit-point domain D2");
  bool trace = false;
  int points = 256;
  std::vector<double> query;
  domain->add_flag("--trace", trace, "Emit the boundary polyline");
  domain->add_option("--points", points, "Boundary points per quadrant")
      ->capture_default_str();
  domain->add_option("--query", query, "Membership query: U V")
      ->expected(2);
  add_common(domain, common);

  auto* experiment = app.add_subcommand("experiment", "Run a Monte Carlo experiment");
  std::string experiment_id;
  std::optional<std::int64_t> exp_n, exp_r, exp_n_max;
  std::vector<double> exp_thetas;
  experiment->add_option("--id", experiment_id,
                         "c1-scaling | c2-scaling | joint | levy | laplace | "
                         "coupling | lil | chung-hirsch")
      ->required();
  experiment->add_option("--n", exp_n, "Horizon override");
  experiment->add_option("--R", exp_r, "Replica count override");
  experiment->add_option("--n-max", exp_n_max, "Diagnostic horizon override");
  experiment->add_option("--theta", exp_thetas, "Laplace exponents");
  add_common(experiment, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    apply_env_seed(common);
    if (simulate->parsed()) return cmd_simulate(common, sim_n, coupled);
    if (density->parsed()) {
      if (thetas.empty()) thetas.push_back(1.0);
      return cmd_density(common, model, grid_spec, grid2_spec, thetas,
                         laplace_t);
    }
    if (domain->parsed()) return cmd_domain(common, trace, points, query);
    if (experiment->parsed()) {
      return cmd_experiment(common, experiment_id, exp_n, exp_r, exp_n_max,
                            exp_thetas);
    }
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
