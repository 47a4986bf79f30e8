#include "combwalk/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "combwalk/coupling.hpp"
#include "combwalk/densities.hpp"
#include "combwalk/limit_set.hpp"
#include "combwalk/parallel.hpp"
#include "combwalk/walk.hpp"

namespace combwalk {

namespace {

using ordered_json = nlohmann::ordered_json;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Stream ids per experiment, so distinct experiments at the same seed stay
// independent.
std::uint64_t stream_salt(const std::string& id) {
  if (id == "c1-scaling") return 11;
  if (id == "c2-scaling") return 12;
  if (id == "joint") return 13;
  if (id == "levy") return 14;
  if (id == "laplace") return 15;
  if (id == "coupling") return 16;
  if (id == "lil") return 17;
  if (id == "chung-hirsch") return 18;
  throw std::invalid_argument("unknown experiment id: " + id);
}

StatEntry gated(const std::string& name, double value, double tolerance) {
  return StatEntry{name, value, tolerance, true,
                   std::abs(value) <= tolerance};
}

StatEntry info(const std::string& name, double value) {
  return StatEntry{name, value, 0.0, false, true};
}

struct SimpleWalkSummary {
  std::int64_t xi0 = 0;      // visits to zero among steps 1..n
  std::int64_t max = 0;      // running max M(n)
  std::int64_t abs_end = 0;  // |S(n)|
  std::int64_t max_minus_end = 0;
};

SimpleWalkSummary stream_simple_walk(std::int64_t n, RngStream rng) {
  std::int64_t s = 0, m = 0, xi = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    s += simple_walk_step(rng.next_u01());
    if (s > m) m = s;
    if (s == 0) ++xi;
  }
  return {xi, m, std::abs(s), m - s};
}

void require_positive(const ExperimentPlan& plan, std::int64_t min_n,
                      std::int64_t min_r) {
  if (plan.n < min_n) {
    throw std::invalid_argument(plan.id + ": horizon n too small");
  }
  if (plan.replicas < min_r) {
    throw std::invalid_argument(plan.id + ": too few replicas");
  }
}

std::string basic_params(const ExperimentPlan& plan, bool with_r = true) {
  ordered_json j;
  j["n"] = plan.n;
  if (with_r) j["R"] = plan.replicas;
  return j.dump();
}

}  // namespace

bool TestReport::all_gated_pass() const {
  for (const auto& s : statistics) {
    if (s.gated && !s.pass) return false;
  }
  return true;
}

const StatEntry* TestReport::find(const std::string& name) const {
  for (const auto& s : statistics) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::string TestReport::to_json() const {
  ordered_json j;
  j["experiment"] = experiment;
  j["params"] = ordered_json::parse(params_json);
  j["seed"] = seed;
  ordered_json stats = ordered_json::array();
  for (const auto& s : statistics) {
    ordered_json e;
    e["name"] = s.name;
    e["value"] = s.value;
    e["tolerance"] = s.tolerance;
    e["gated"] = s.gated;
    e["pass"] = s.pass;
    stats.push_back(e);
  }
  j["statistics"] = stats;
  j["duration_ms"] = duration_ms;
  return j.dump(2) + "\n";
}

const std::vector<RateSequence>& beta_presets() {
  static const std::vector<RateSequence> presets = {
      // sum 1/(n log n) diverges; sum 1/(n log^2 n) converges.
      {"1/log n", [](double n) { return 1.0 / std::log(n); }, false, true},
      // sum 1/(n log n loglog n) diverges; its square converges.
      {"1/(log n loglog n)",
       [](double n) { return 1.0 / (std::log(n) * loglog_safe(n)); }, false,
       true},
      // both series converge.
      {"1/log^2 n", [](double n) { return 1.0 / std::pow(std::log(n), 2); },
       true, true},
  };
  return presets;
}

double loglog_safe(double n) {
  return std::log(std::max(std::log(n), std::numbers::e));
}

double ks_statistic_gate_c2() { return 0.04; }
double ks_statistic_gate_c1() { return 0.05; }
double tv_gate_joint() { return 0.08; }
double ks_gate_levy() { return 0.04; }
double ks_gate_coupling() { return 0.04; }
double laplace_gate() { return 0.01; }

TestReport scaling_limit_c2(const ExperimentPlan& plan) {
  Timer timer;
  require_positive(plan, 256, 1);
  RngStream base(plan.seed, stream_salt("c2-scaling"));
  const double scale = std::sqrt(static_cast<double>(plan.n));

  std::vector<double> samples(static_cast<std::size_t>(plan.replicas));
  parallel_for(plan.replicas, plan.threads, [&](std::int64_t r) {
    RngStream rng = base.substream(static_cast<std::uint64_t>(r));
    Site end = sample_comb_endpoint(plan.n, rng);
    samples[static_cast<std::size_t>(r)] = static_cast<double>(end.y) / scale;
  });

  TestReport report;
  report.experiment = "c2-scaling";
  report.params_json = basic_params(plan);
  report.seed = plan.seed;
  double ks = ks_statistic(samples, [](double z) { return std_normal_cdf(z); });
  report.statistics.push_back(gated("ks_c2_vs_normal", ks,
                                    ks_statistic_gate_c2()));
  if (plan.replicas >= 2) {
    report.statistics.push_back(
        gated("c2_variance_minus_one", variance(samples) - 1.0, 0.1));
    report.statistics.push_back(info("c2_mean", mean(samples)));
  }
  // Lattice support: the scaled endpoint lives on a 1/sqrt(n) grid, which
  // bounds the CDF jump the KS statistic sees.
  report.statistics.push_back(
      info("lattice_half_cell_allowance", 0.5 * std_normal_pdf(0.0) / scale));
  report.duration_ms = timer.elapsed_ms();
  return report;
}

TestReport scaling_limit_c1(const ExperimentPlan& plan) {
  Timer timer;
  require_positive(plan, 1 << 14, 2);
  RngStream base(plan.seed, stream_salt("c1-scaling"));
  const double scale = std::pow(static_cast<double>(plan.n), 0.25);

  std::vector<double> samples(static_cast<std::size_t>(plan.replicas));
  parallel_for(plan.replicas, plan.threads, [&](std::int64_t r) {
    RngStream rng = base.substream(static_cast<std::uint64_t>(r));
    Site end = sample_comb_endpoint(plan.n, rng);
    samples[static_cast<std::size_t>(r)] = static_cast<double>(end.x) / scale;
  });

  std::vector<double> grid;
  for (double x = -8.0; x <= 8.0 + 1e-12; x += 1.0 / 128.0) grid.push_back(x);
  CdfTable dob = cdf_table(DensityId::Dobrushin, grid);

  TestReport report;
  report.experiment = "c1-scaling";
  report.params_json = basic_params(plan);
  report.seed = plan.seed;
  double ks =
      ks_statistic(samples, [&dob](double x) { return dob.eval(x); });
  report.statistics.push_back(
      gated("ks_c1_vs_dobrushin", ks, ks_statistic_gate_c1()));
  double m = mean(samples);
  double sd = std::sqrt(variance(samples));
  report.statistics.push_back(gated(
      "c1_mean", m, 4.0 * sd / std::sqrt(static_cast<double>(plan.replicas))));
  report.statistics.push_back(info(
      "lattice_half_cell_allowance", 0.5 * dobrushin_density(0.0) / scale));
  report.duration_ms = timer.elapsed_ms();
  return report;
}

TestReport joint_limit_check(const ExperimentPlan& plan,
                             ExperimentArtifacts* artifacts) {
  Timer timer;
  require_positive(plan, 256, 1);
  if (plan.grid_cells_x < 24 || plan.grid_cells_y < 24 ||
      plan.grid_half_width < 3.0) {
    throw std::invalid_argument(
        "joint: grid must cover [-3,3]^2 with >= 24x24 cells");
  }
  RngStream base(plan.seed, stream_salt("joint"));
  const double w = plan.grid_half_width;
  const double scale1 = std::pow(static_cast<double>(plan.n), 0.25);
  const double scale2 = std::sqrt(static_cast<double>(plan.n));

  Histogram2D hist(plan.grid_cells_x, plan.grid_cells_y, -w, w, -w, w);
  std::vector<int> cell(static_cast<std::size_t>(plan.replicas));
  std::vector<double> sign1(static_cast<std::size_t>(plan.replicas));
  std::vector<double> sign2(static_cast<std::size_t>(plan.replicas));
  parallel_for(plan.replicas, plan.threads, [&](std::int64_t r) {
    RngStream rng = base.substream(static_cast<std::uint64_t>(r));
    Site end = sample_comb_endpoint(plan.n, rng);
    double u = static_cast<double>(end.x) / scale1;
    double v = static_cast<double>(end.y) / scale2;
    auto idx = static_cast<std::size_t>(r);
    cell[idx] = hist.cell_x(u) * hist.ny + hist.cell_y(v);
    sign1[idx] = end.x > 0 ? 1.0 : (end.x < 0 ? -1.0 : 0.0);
    sign2[idx] = end.y > 0 ? 1.0 : (end.y < 0 ? -1.0 : 0.0);
  });
  for (int c : cell) {
    hist.counts[static_cast<std::size_t>(c)] += 1;
    ++hist.total;
  }

  // Cell masses of the limiting joint law; edge cells integrate to infinity
  // (truncated where the Gaussian-dominated tails are negligible).
  std::vector<double> model(hist.counts.size());
  QuadratureSpec eval_spec;
  eval_spec.abs_tol = 1e-11;
  parallel_for(static_cast<std::int64_t>(model.size()), plan.threads,
               [&](std::int64_t c) {
                 int ix = static_cast<int>(c) / hist.ny;
                 int iy = static_cast<int>(c) % hist.ny;
                 double ulo, uhi, zlo, zhi;
                 hist.cell_bounds_x(ix, ulo, uhi);
                 hist.cell_bounds_y(iy, zlo, zhi);
                 ulo = std::max(ulo, -12.0);
                 uhi = std::min(uhi, 12.0);
                 zlo = std::max(zlo, -12.0);
                 zhi = std::min(zhi, 12.0);
                 QuadratureSpec outer_spec;
                 outer_spec.abs_tol = 5e-9;
                 QuadratureSpec inner_spec;
                 inner_spec.abs_tol = 1e-9;
                 auto inner = [&](double z) {
                   return integrate_or_throw(
                       [&](double u) {
                         return joint_density_uz(u, z, eval_spec);
                       },
                       ulo, uhi, inner_spec, "joint cell u-integral");
                 };
                 model[static_cast<std::size_t>(c)] = integrate_or_throw(
                     inner, zlo, zhi, outer_spec, "joint cell z-integral");
               });

  TestReport report;
  report.experiment = "joint";
  report.params_json = [&] {
    ordered_json j = ordered_json::parse(basic_params(plan));
    j["grid"] = std::to_string(plan.grid_cells_x) + "x" +
                std::to_string(plan.grid_cells_y);
    j["half_width"] = plan.grid_half_width;
    return j.dump();
  }();
  report.seed = plan.seed;
  report.statistics.push_back(
      gated("tv_joint_vs_density", tv_distance(hist, model), tv_gate_joint()));
  report.statistics.push_back(
      gated("sign_correlation", pearson_correlation(sign1, sign2),
            4.0 / std::sqrt(static_cast<double>(plan.replicas))));
  double mass = 0;
  for (std::int64_t c : hist.counts) mass += static_cast<double>(c);
  report.statistics.push_back(
      info("histogram_mass_minus_one",
           mass / static_cast<double>(hist.total) - 1.0));
  report.duration_ms = timer.elapsed_ms();
  if (artifacts) {
    artifacts->joint_hist = hist;
    artifacts->joint_model_probs = model;
  }
  return report;
}

TestReport levy_identity_check(const ExperimentPlan& plan) {
  Timer timer;
  require_positive(plan, 1024, 2);
  RngStream base(plan.seed, stream_salt("levy"));

  std::vector<double> xi(static_cast<std::size_t>(plan.replicas));
  std::vector<double> abs_end(static_cast<std::size_t>(plan.replicas));
  std::vector<double> max_side(static_cast<std::size_t>(plan.replicas));
  std::vector<double> max_minus(static_cast<std::size_t>(plan.replicas));
  parallel_for(plan.replicas, plan.threads, [&](std::int64_t r) {
    auto idx = static_cast<std::size_t>(r);
    SimpleWalkSummary a = stream_simple_walk(
        plan.n, base.substream(2 * static_cast<std::uint64_t>(r)));
    xi[idx] = static_cast<double>(a.xi0);
    abs_end[idx] = static_cast<double>(a.abs_end);
    SimpleWalkSummary b = stream_simple_walk(
        plan.n, base.substream(2 * static_cast<std::uint64_t>(r) + 1));
    max_side[idx] = static_cast<double>(b.max);
    max_minus[idx] = static_cast<double>(b.max_minus_end);
  });

  TestReport report;
  report.experiment = "levy";
  report.params_json = basic_params(plan);
  report.seed = plan.seed;
  report.statistics.push_back(gated(
      "ks_xi0_vs_max", ks_two_sample(xi, max_side), ks_gate_levy()));
  report.statistics.push_back(gated("ks_absend_vs_max_minus_end",
                                    ks_two_sample(abs_end, max_minus),
                                    ks_gate_levy()));
  report.duration_ms = timer.elapsed_ms();
  return report;
}

TestReport laplace_check(const ExperimentPlan& plan) {
  Timer timer;
  require_positive(plan, 1024, 2);
  for (double theta : plan.thetas) {
    if (theta <= 0.0) {
      throw std::invalid_argument("laplace: thetas must be positive");
    }
  }
  RngStream base(plan.seed, stream_salt("laplace"));
  const double sqrt_n = std::sqrt(static_cast<double>(plan.n));

  std::vector<std::int64_t> xi(static_cast<std::size_t>(plan.replicas));
  parallel_for(plan.replicas, plan.threads, [&](std::int64_t r) {
    xi[static_cast<std::size_t>(r)] =
        stream_simple_walk(plan.n,
                           base.substream(static_cast<std::uint64_t>(r)))
            .xi0;
  });

  TestReport report;
  report.experiment = "laplace";
  report.params_json = [&] {
    ordered_json j = ordered_json::parse(basic_params(plan));
    j["thetas"] = plan.thetas;
    return j.dump();
  }();
  report.seed = plan.seed;
  for (double theta : plan.thetas) {
    double sum = 0.0, sumsq = 0.0;
    for (std::int64_t v : xi) {
      double e = std::exp(-theta * static_cast<double>(v) / sqrt_n);
      sum += e;
      sumsq += e * e;
    }
    double m = sum / static_cast<double>(plan.replicas);
    double var =
        (sumsq - sum * m) / static_cast<double>(plan.replicas - 1);
    double gap = m - local_time_laplace(theta, 1.0);
    std::string tag = "theta=" + ordered_json(theta).dump();
    report.statistics.push_back(
        gated("laplace_gap[" + tag + "]", gap, laplace_gate()));
    report.statistics.push_back(
        info("laplace_mc_se[" + tag + "]",
             std::sqrt(std::max(var, 0.0) /
                       static_cast<double>(plan.replicas))));
  }
  report.duration_ms = timer.elapsed_ms();
  return report;
}

TestReport coupling_check(const ExperimentPlan& plan) {
  Timer timer;
  RngStream base(plan.seed, stream_salt("coupling"));
  CouplingCheckReport check =
      coupling_distribution_check(plan.n, plan.replicas, base, plan.threads);

  TestReport report;
  report.experiment = "coupling";
  report.params_json = basic_params(plan);
  report.seed = plan.seed;
  report.statistics.push_back(
      gated("ks_c1_coupled_vs_direct", check.ks_c1, ks_gate_coupling()));
  report.statistics.push_back(
      gated("ks_c2_coupled_vs_direct", check.ks_c2, ks_gate_coupling()));
  report.statistics.push_back(
      info("axis_fraction_coupled", check.axis_fraction_coupled));
  report.statistics.push_back(
      info("axis_fraction_direct", check.axis_fraction_direct));
  report.statistics.push_back(
      info("axis_fraction_gap",
           check.axis_fraction_coupled - check.axis_fraction_direct));
  report.duration_ms = timer.elapsed_ms();
  return report;
}

namespace {

// Checkpoints 2^k up to the horizon. The floor skips the pre-asymptotic
// regime where the axis dwell still distorts both coordinates.
std::vector<std::int64_t> diagnostic_checkpoints(std::int64_t n_max) {
  std::vector<std::int64_t> cps;
  std::int64_t lower = n_max < 1024 ? 16 : 1024;
  for (std::int64_t n = lower; n < n_max; n *= 2) cps.push_back(n);
  cps.push_back(n_max);
  return cps;
}

}  // namespace

TestReport lil_diagnostic(const ExperimentPlan& plan,
                          ExperimentArtifacts* artifacts) {
  Timer timer;
  if (plan.n_max < 16) throw std::invalid_argument("lil: n_max too small");
  RngStream rng = RngStream(plan.seed, stream_salt("lil")).substream(0);

  std::vector<std::int64_t> cps = diagnostic_checkpoints(plan.n_max);
  std::vector<LilRow> rows;
  rows.reserve(cps.size());
  Site pos{0, 0};
  double c1_sup = -std::numeric_limits<double>::infinity();
  double c2_sup = -std::numeric_limits<double>::infinity();
  double c1_abs_sup = 0.0;
  double c2_abs_sup = 0.0;
  std::size_t next = 0;
  for (std::int64_t i = 1; i <= plan.n_max && next < cps.size(); ++i) {
    pos = step_comb(pos, rng.next_u01());
    if (i == cps[next]) {
      double n = static_cast<double>(i);
      double ll = loglog_safe(n);
      LilRow row;
      row.n = i;
      row.c1_stat = static_cast<double>(pos.x) /
                    (std::pow(n, 0.25) * std::pow(ll, 0.75));
      row.c1_stat_strassen = row.c1_stat / lil_conversion_factor();
      row.c2_stat = static_cast<double>(pos.y) / std::sqrt(2.0 * n * ll);
      c1_sup = std::max(c1_sup, row.c1_stat);
      c2_sup = std::max(c2_sup, row.c2_stat);
      c1_abs_sup = std::max(c1_abs_sup, std::abs(row.c1_stat));
      c2_abs_sup = std::max(c2_abs_sup, std::abs(row.c2_stat));
      row.c1_running_sup = c1_sup;
      row.c2_running_sup = c2_sup;
      row.c1_abs_running_sup = c1_abs_sup;
      row.c2_abs_running_sup = c2_abs_sup;
      rows.push_back(row);
      ++next;
    }
  }

  TestReport report;
  report.experiment = "lil";
  report.params_json = [&] {
    ordered_json j;
    j["n_max"] = plan.n_max;
    j["checkpoints"] = cps.size();
    return j.dump();
  }();
  report.seed = plan.seed;
  report.statistics.push_back(info("c1_lil_running_sup", c1_sup));
  report.statistics.push_back(info("c1_lil_abs_running_sup", c1_abs_sup));
  report.statistics.push_back(
      info("c1_lil_target", std::pow(2.0, 1.25) * std::pow(3.0, -0.75)));
  report.statistics.push_back(info("c2_lil_running_sup", c2_sup));
  report.statistics.push_back(info("c2_lil_abs_running_sup", c2_abs_sup));
  report.statistics.push_back(info("c2_lil_target", 1.0));
  report.duration_ms = timer.elapsed_ms();
  if (artifacts) artifacts->lil_series = std::move(rows);
  return report;
}

TestReport chung_hirsch_diagnostic(const ExperimentPlan& plan,
                                   ExperimentArtifacts* artifacts) {
  Timer timer;
  if (plan.n_max < 16) {
    throw std::invalid_argument("chung-hirsch: n_max too small");
  }
  const auto& presets = beta_presets();
  RngStream rng = RngStream(plan.seed, stream_salt("chung-hirsch")).substream(0);

  std::vector<std::int64_t> cps = diagnostic_checkpoints(plan.n_max);
  std::vector<ChungRow> rows;
  rows.reserve(cps.size());
  Site pos{0, 0};
  std::int64_t max_abs_c2 = 0, max_c1 = 0, max_abs_c1 = 0;
  double chung_inf = std::numeric_limits<double>::infinity();
  std::array<double, 3> one_sided_inf{}, abs_inf{};
  one_sided_inf.fill(std::numeric_limits<double>::infinity());
  abs_inf.fill(std::numeric_limits<double>::infinity());
  std::size_t next = 0;
  for (std::int64_t i = 1; i <= plan.n_max && next < cps.size(); ++i) {
    pos = step_comb(pos, rng.next_u01());
    max_abs_c2 = std::max(max_abs_c2, std::abs(pos.y));
    max_c1 = std::max(max_c1, pos.x);
    max_abs_c1 = std::max(max_abs_c1, std::abs(pos.x));
    if (i == cps[next]) {
      double n = static_cast<double>(i);
      ChungRow row;
      row.n = i;
      row.chung_stat =
          std::sqrt(8.0 * loglog_safe(n) /
                    (std::numbers::pi * std::numbers::pi * n)) *
          static_cast<double>(max_abs_c2);
      chung_inf = std::min(chung_inf, row.chung_stat);
      row.chung_running_inf = chung_inf;
      double quarter = std::pow(n, 0.25);
      for (std::size_t j = 0; j < presets.size(); ++j) {
        double denom = quarter * presets[j].beta(n);
        row.hirsch_one_sided[j] = static_cast<double>(max_c1) / denom;
        row.hirsch_abs[j] = static_cast<double>(max_abs_c1) / denom;
        one_sided_inf[j] = std::min(one_sided_inf[j], row.hirsch_one_sided[j]);
        abs_inf[j] = std::min(abs_inf[j], row.hirsch_abs[j]);
        row.hirsch_one_sided_inf[j] = one_sided_inf[j];
        row.hirsch_abs_inf[j] = abs_inf[j];
      }
      rows.push_back(row);
      ++next;
    }
  }

  TestReport report;
  report.experiment = "chung-hirsch";
  report.params_json = [&] {
    ordered_json j;
    j["n_max"] = plan.n_max;
    ordered_json betas = ordered_json::array();
    for (const auto& p : presets) {
      ordered_json b;
      b["name"] = p.name;
      b["sum_beta_over_n"] =
          p.sum_beta_over_n_converges ? "convergent" : "divergent";
      b["sum_beta_sq_over_n"] =
          p.sum_beta_sq_over_n_converges ? "convergent" : "divergent";
      betas.push_back(b);
    }
    j["beta_presets"] = betas;
    return j.dump();
  }();
  report.seed = plan.seed;
  report.statistics.push_back(info("chung_running_inf", chung_inf));
  report.statistics.push_back(info("chung_target", 1.0));
  for (std::size_t j = 0; j < presets.size(); ++j) {
    report.statistics.push_back(info(
        "hirsch_one_sided_running_inf[" + presets[j].name + "]",
        one_sided_inf[j]));
    report.statistics.push_back(
        info("hirsch_abs_running_inf[" + presets[j].name + "]", abs_inf[j]));
  }
  report.duration_ms = timer.elapsed_ms();
  if (artifacts) artifacts->chung_series = std::move(rows);
  return report;
}

TestReport run_experiment(const ExperimentPlan& plan,
                          ExperimentArtifacts* artifacts) {
  if (plan.id == "c1-scaling") return scaling_limit_c1(plan);
  if (plan.id == "c2-scaling") return scaling_limit_c2(plan);
  if (plan.id == "joint") return joint_limit_check(plan, artifacts);
  if (plan.id == "levy") return levy_identity_check(plan);
  if (plan.id == "laplace") return laplace_check(plan);
  if (plan.id == "coupling") return coupling_check(plan);
  if (plan.id == "lil") return lil_diagnostic(plan, artifacts);
  if (plan.id == "chung-hirsch") return chung_hirsch_diagnostic(plan, artifacts);
  throw std::invalid_argument("unknown experiment id: " + plan.id);
}

ExperimentPlan default_plan(const std::string& id) {
  ExperimentPlan plan;
  plan.id = id;
  stream_salt(id);  // validates the id
  if (id == "c1-scaling") {
    plan.n = 1 << 16;
    plan.replicas = 2000;
  } else if (id == "c2-scaling") {
    plan.n = 4096;
    plan.replicas = 5000;
  } else if (id == "joint") {
    plan.n = 1 << 16;
    plan.replicas = 10000;
  } else if (id == "levy") {
    plan.n = 4096;
    plan.replicas = 5000;
  } else if (id == "laplace") {
    plan.n = 4096;
    plan.replicas = 100000;
  } else if (id == "coupling") {
    plan.n = 4096;
    plan.replicas = 5000;
  } else if (id == "lil" || id == "chung-hirsch") {
    plan.n_max = 1000000;
  }
  return plan;
}

}  // namespace combwalk
