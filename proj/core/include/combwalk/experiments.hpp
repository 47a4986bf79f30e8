#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "combwalk/rng.hpp"
#include "combwalk/stats.hpp"

namespace combwalk {

/// Gated entries carry their tolerance and a pass flag; report-only
/// diagnostics are recorded with gated = false and never fail a run.
struct StatEntry {
  std::string name;
  double value = 0;
  double tolerance = 0;
  bool gated = false;
  bool pass = true;
};

struct TestReport {
  std::string experiment;
  std::string params_json = "{}";
  std::uint64_t seed = 0;
  std::vector<StatEntry> statistics;
  std::int64_t duration_ms = 0;

  bool all_gated_pass() const;
  const StatEntry* find(const std::string& name) const;
  /// Serialized per the report schema:
  /// {experiment, params, seed, statistics:[...], duration_ms}.
  std::string to_json() const;
};

/// Everything that determines a run. The seed fixes all replica streams;
/// the thread count never changes any statistic.
struct ExperimentPlan {
  std::string id;
  std::int64_t n = 4096;
  std::int64_t replicas = 5000;
  std::uint64_t seed = 0;
  int threads = 1;
  std::vector<double> thetas = {0.5, 1.0, 2.0};
  std::int64_t n_max = 1000000;
  int grid_cells_x = 24;
  int grid_cells_y = 24;
  double grid_half_width = 3.0;
};

/// Non-increasing rate sequence with its integral-test classifications.
struct RateSequence {
  std::string name;
  std::function<double(double)> beta;
  bool sum_beta_over_n_converges = false;
  bool sum_beta_sq_over_n_converges = false;
};

/// The three named presets: 1/log n, 1/(log n loglog n), 1/log^2 n.
const std::vector<RateSequence>& beta_presets();

/// log(max(log n, e)): keeps the iterated logarithm positive at small n.
double loglog_safe(double n);

struct LilRow {
  std::int64_t n = 0;
  double c1_stat = 0;           // C1(n) / (n^{1/4} (loglog n)^{3/4})
  double c1_stat_strassen = 0;  // same with the extra 2^{3/4} normalization
  double c2_stat = 0;           // C2(n) / (2 n loglog n)^{1/2}
  double c1_running_sup = 0;    // sup of the signed statistic
  double c2_running_sup = 0;
  double c1_abs_running_sup = 0;  // sup of |coordinate| statistic; the
  double c2_abs_running_sup = 0;  // limsup constant is the same by symmetry
};

struct ChungRow {
  std::int64_t n = 0;
  double chung_stat = 0;  // (8 loglog n / (pi^2 n))^{1/2} max_{k<=n} |C2(k)|
  double chung_running_inf = 0;
  std::array<double, 3> hirsch_one_sided{};  // max C1 / (n^{1/4} beta(n))
  std::array<double, 3> hirsch_one_sided_inf{};
  std::array<double, 3> hirsch_abs{};        // max |C1| / (n^{1/4} beta(n))
  std::array<double, 3> hirsch_abs_inf{};
};

struct ExperimentArtifacts {
  Histogram2D joint_hist;
  std::vector<double> joint_model_probs;
  std::vector<LilRow> lil_series;
  std::vector<ChungRow> chung_series;
};

double ks_statistic_gate_c2();  // frozen gates of the CI-gated experiments
double ks_statistic_gate_c1();
double tv_gate_joint();
double ks_gate_levy();
double ks_gate_coupling();
double laplace_gate();

TestReport scaling_limit_c2(const ExperimentPlan& plan);
TestReport scaling_limit_c1(const ExperimentPlan& plan);
TestReport joint_limit_check(const ExperimentPlan& plan,
                             ExperimentArtifacts* artifacts = nullptr);
TestReport levy_identity_check(const ExperimentPlan& plan);
TestReport laplace_check(const ExperimentPlan& plan);
TestReport coupling_check(const ExperimentPlan& plan);
TestReport lil_diagnostic(const ExperimentPlan& plan,
                          ExperimentArtifacts* artifacts = nullptr);
TestReport chung_hirsch_diagnostic(const ExperimentPlan& plan,
                                   ExperimentArtifacts* artifacts = nullptr);

/// Known ids: c1-scaling, c2-scaling, joint, levy, laplace, coupling, lil,
/// chung-hirsch. Unknown ids are rejected.
TestReport run_experiment(const ExperimentPlan& plan,
                          ExperimentArtifacts* artifacts = nullptr);

/// Defaults (n, replicas, n_max) matching the experiment's calibration.
ExperimentPlan default_plan(const std::string& id);

}  // namespace combwalk
