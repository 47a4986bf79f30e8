// Acceptance suite: one self-contained check per criterion, one pass/fail
// line each. Every tolerance is pinned here; diagnostics are recorded but
// never gate. Run all criteria (no arguments) or a single one (--only K).

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "combwalk/coupling.hpp"
#include "combwalk/densities.hpp"
#include "combwalk/experiments.hpp"
#include "combwalk/limit_set.hpp"
#include "combwalk/local_time.hpp"
#include "combwalk/parallel.hpp"
#include "combwalk/quadrature.hpp"
#include "combwalk/rng.hpp"
#include "combwalk/stats.hpp"
#include "combwalk/walk.hpp"

namespace {

using namespace combwalk;
namespace fs = std::filesystem;

constexpr std::uint64_t kSeed = 1234;
const int kThreads = 0;  // all cores; results are thread-count independent

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------- 1
Outcome structural_exactness() {
  const std::int64_t n = 10000;
  const std::int64_t paths = 10000;
  std::vector<std::uint8_t> ok_direct(paths, 0), ok_coupled(paths, 0);

  RngStream direct_base(kSeed, 201);
  parallel_for(paths, kThreads, [&](std::int64_t r) {
    RngStream rng = direct_base.substream(static_cast<std::uint64_t>(r));
    CombPath p = sample_comb_path(n, rng);
    ok_direct[static_cast<std::size_t>(r)] = is_legal_comb_path(p) ? 1 : 0;
  });

  RngStream coupled_base(kSeed, 202);
  parallel_for(paths, kThreads, [&](std::int64_t r) {
    CoupledCombPath p = sample_coupled_comb_path(
        n, coupled_base.substream(static_cast<std::uint64_t>(r)));
    bool good = is_legal_comb_path(p.path);
    for (std::size_t i = 0; good && i < p.phase.size(); ++i) {
      const Site& before = p.path.sites[i];
      const Site& after = p.path.sites[i + 1];
      if (p.phase[i] == Phase::Axis) {
        good = before.y == 0 && after.y == 0;
      } else {
        good = after.x == before.x;
      }
    }
    ok_coupled[static_cast<std::size_t>(r)] = good ? 1 : 0;
  });

  std::int64_t bad = 0;
  for (std::int64_t r = 0; r < paths; ++r) {
    if (!ok_direct[static_cast<std::size_t>(r)]) ++bad;
    if (!ok_coupled[static_cast<std::size_t>(r)]) ++bad;
  }
  return {bad == 0, std::to_string(2 * paths) + " paths of n=" +
                        std::to_string(n) + ", illegal/bookkeeping failures: " +
                        std::to_string(bad)};
}

// ---------------------------------------------------------------- 2
Outcome transition_frequencies() {
  const std::int64_t N = 1000000;
  const double band = 0.002;
  RngStream rng(kSeed, 203);

  std::int64_t axis[4] = {0, 0, 0, 0};
  for (std::int64_t i = 0; i < N; ++i) {
    Site s{static_cast<std::int64_t>(rng.next_u64() % 2001) - 1000, 0};
    Site t = step_comb(s, rng.next_u01());
    if (t.x == s.x + 1) ++axis[0];
    else if (t.x == s.x - 1) ++axis[1];
    else if (t.y == 1) ++axis[2];
    else ++axis[3];
  }
  double worst_axis = 0;
  for (std::int64_t c : axis) {
    worst_axis = std::max(
        worst_axis, std::abs(static_cast<double>(c) / N - 0.25));
  }

  std::int64_t tooth[2] = {0, 0};
  for (std::int64_t i = 0; i < N; ++i) {
    std::int64_t y = static_cast<std::int64_t>(rng.next_u64() % 50) + 1;
    Site s{static_cast<std::int64_t>(i % 17), i % 2 == 0 ? y : -y};
    Site t = step_comb(s, rng.next_u01());
    ++tooth[t.y == s.y + 1 ? 0 : 1];
  }
  double worst_tooth = 0;
  for (std::int64_t c : tooth) {
    worst_tooth = std::max(
        worst_tooth, std::abs(static_cast<double>(c) / N - 0.5));
  }

  bool pass = worst_axis < band && worst_tooth < band;
  return {pass, "1e6 axis + 1e6 tooth transitions; max |freq-p| = " +
                    fmt(worst_axis) + " (axis), " + fmt(worst_tooth) +
                    " (tooth), band " + fmt(band)};
}

// ---------------------------------------------------------------- 3
Outcome local_time_identities() {
  const std::int64_t n = 100000;
  const std::int64_t paths = 1000;
  RngStream base(kSeed, 204);
  std::vector<std::uint8_t> ok(paths, 0);
  parallel_for(paths, kThreads, [&](std::int64_t r) {
    RngStream rng = base.substream(static_cast<std::uint64_t>(r));
    SimpleWalkPath p = sample_simple_walk(n, rng);
    bool good = local_time_table(p, n).total() == n;
    ReturnTimes rt = return_times(p);
    std::int64_t zeros_seen = 0;
    for (std::int64_t i = 1; good && i <= n; ++i) {
      if (p.values[static_cast<std::size_t>(i)] == 0) {
        ++zeros_seen;
        // xi(0, rho(N)) = N: the N-th return is the N-th zero.
        good = rt.rho[static_cast<std::size_t>(zeros_seen)] == i;
      }
    }
    good = good && rt.returns() == zeros_seen;
    ok[static_cast<std::size_t>(r)] = good ? 1 : 0;
  });
  std::int64_t bad = 0;
  for (auto o : ok) {
    if (!o) ++bad;
  }
  return {bad == 0, "1000 paths of n=1e5; partition and return-time "
                    "identity failures: " +
                        std::to_string(bad)};
}

// ---------------------------------------------------------------- 4
Outcome coupling_fidelity() {
  CouplingCheckReport r = coupling_distribution_check(
      4096, 5000, RngStream(kSeed, 205), kThreads);
  bool pass = r.ks_c1 < 0.04 && r.ks_c2 < 0.04;
  return {pass, "two-sample KS c1 = " + fmt(r.ks_c1) + ", c2 = " +
                    fmt(r.ks_c2) + " (gate 0.04)"};
}

// ---------------------------------------------------------------- 5
Outcome sign_reconstruction() {
  const std::int64_t n = 4096;
  RngStream base(kSeed, 206);

  std::int64_t abs_failures = 0;
  for (std::int64_t r = 0; r < 1000; ++r) {
    RngStream walk_rng = base.substream(3 * static_cast<std::uint64_t>(r));
    RngStream sign_rng = base.substream(3 * static_cast<std::uint64_t>(r) + 1);
    SimpleWalkPath p = sample_simple_walk(n, walk_rng);
    std::vector<std::int64_t> reflected(p.values.size());
    for (std::size_t i = 0; i < p.values.size(); ++i) {
      reflected[i] = std::abs(p.values[i]);
    }
    SimpleWalkPath signed_path = sign_excursions(reflected, sign_rng);
    for (std::size_t i = 0; i < reflected.size(); ++i) {
      if (std::abs(signed_path.values[i]) != reflected[i]) {
        ++abs_failures;
        break;
      }
    }
  }

  const std::int64_t R = 5000;
  std::vector<double> reconstructed(static_cast<std::size_t>(R));
  std::vector<double> independent(static_cast<std::size_t>(R));
  parallel_for(R, kThreads, [&](std::int64_t r) {
    RngStream walk_rng = base.substream(3 * static_cast<std::uint64_t>(r));
    RngStream sign_rng = base.substream(3 * static_cast<std::uint64_t>(r) + 1);
    SimpleWalkPath p = sample_simple_walk(n, walk_rng);
    std::vector<std::int64_t> reflected(p.values.size());
    for (std::size_t i = 0; i < p.values.size(); ++i) {
      reflected[i] = std::abs(p.values[i]);
    }
    reconstructed[static_cast<std::size_t>(r)] =
        static_cast<double>(sign_excursions(reflected, sign_rng).endpoint());
    RngStream indep_rng = base.substream(3 * static_cast<std::uint64_t>(r) + 2);
    independent[static_cast<std::size_t>(r)] = static_cast<double>(
        sample_simple_walk(n, indep_rng).endpoint());
  });
  double ks = ks_two_sample(reconstructed, independent);
  bool pass = abs_failures == 0 && ks < 0.04;
  return {pass, "abs-identity failures: " + std::to_string(abs_failures) +
                    "; endpoint two-sample KS = " + fmt(ks) + " (gate 0.04)"};
}

// ---------------------------------------------------------------- 6
Outcome marginal_scaling() {
  ExperimentPlan c2 = default_plan("c2-scaling");
  c2.seed = 0;
  c2.threads = kThreads;
  TestReport r2 = scaling_limit_c2(c2);
  ExperimentPlan c1 = default_plan("c1-scaling");
  c1.seed = 0;
  c1.threads = kThreads;
  TestReport r1 = scaling_limit_c1(c1);
  double ks2 = r2.find("ks_c2_vs_normal")->value;
  double ks1 = r1.find("ks_c1_vs_dobrushin")->value;
  bool pass = ks2 < 0.04 && ks1 < 0.05;
  return {pass, "KS(C2/sqrt(n), Phi) = " + fmt(ks2) +
                    " (gate 0.04, n=4096, R=5000); KS(C1/n^{1/4}, Dobrushin) = " +
                    fmt(ks1) + " (gate 0.05, n=2^16, R=2000)"};
}

// ---------------------------------------------------------------- 7
Outcome joint_limit() {
  ExperimentPlan plan = default_plan("joint");
  plan.seed = 0;
  plan.threads = kThreads;
  TestReport r = joint_limit_check(plan);
  double tv = r.find("tv_joint_vs_density")->value;
  return {tv < 0.08, "24x24 histogram TV = " + fmt(tv) +
                         " (gate 0.08, n=2^16, R=1e4)"};
}

// ---------------------------------------------------------------- 8
Outcome quadrature_identities() {
  std::ostringstream detail;
  bool pass = true;

  QuadratureSpec eval;
  eval.abs_tol = 1e-12;
  QuadratureSpec outer;
  outer.abs_tol = 1e-9;
  double dob_norm = integrate_or_throw(
      [&eval](double u) { return dobrushin_density(u, eval); }, -16.0, 16.0,
      outer, "dobrushin normalization");
  pass = pass && std::abs(dob_norm - 1.0) <= 1e-8;
  detail << "dobrushin norm-1 = " << std::abs(dob_norm - 1.0) << " (<=1e-8)";

  // 2^{1/4} Gamma(1/4) / (2 pi)
  double f0 = dobrushin_density(0.0, eval);
  pass = pass && std::abs(f0 - 0.6862126275593262) <= 1e-4;
  detail << "; f(0)-closed = " << std::abs(f0 - 0.6862126275593262)
         << " (<=1e-4)";

  QuadratureSpec joint_eval;
  joint_eval.abs_tol = 1e-11;
  QuadratureSpec inner;
  inner.abs_tol = 2e-8;
  QuadratureSpec outer2;
  outer2.abs_tol = 2e-7;
  double joint_norm = integrate_or_throw(
      [&](double z) {
        return integrate_or_throw(
            [&](double u) { return joint_density_uz(u, z, joint_eval); },
            -12.0, 12.0, inner, "joint norm inner");
      },
      -12.0, 12.0, outer2, "joint norm outer");
  pass = pass && std::abs(joint_norm - 1.0) <= 1e-6;
  detail << "; joint norm-1 = " << std::abs(joint_norm - 1.0) << " (<=1e-6)";

  QuadratureSpec marg;
  marg.abs_tol = 1e-8;
  double worst_marg = 0;
  for (double z : {0.0, 0.5, 1.0, 2.0}) {
    double m = integrate_or_throw(
        [&](double u) { return joint_density_uz(u, z, joint_eval); }, -12.0,
        12.0, marg, "u-marginal");
    worst_marg = std::max(worst_marg, std::abs(m - std_normal_pdf(z)));
  }
  pass = pass && worst_marg <= 1e-6;
  detail << "; max |u-marginal - phi(z)| = " << worst_marg << " (<=1e-6)";

  double worst_consistency = 0;
  for (double u : {0.0, 0.5, 1.0, 2.0}) {
    double m = integrate_or_throw(
        [&](double z) { return joint_density_uz(u, z, joint_eval); }, -12.0,
        12.0, marg, "z-integral");
    worst_consistency =
        std::max(worst_consistency, std::abs(m - dobrushin_density(u, eval)));
  }
  pass = pass && worst_consistency <= 1e-5;
  detail << "; max |z-integral - dobrushin| = " << worst_consistency
         << " (<=1e-5)";

  QuadratureSpec eta_outer;
  eta_outer.abs_tol = 1e-10;
  QuadratureSpec eta_inner;
  eta_inner.abs_tol = 1e-12;
  double eta_norm = integrate_or_throw(
      [&](double z) {
        return integrate_or_throw(
            [z](double y) { return eta_absw_density(y, z); }, 0.0, 14.0,
            eta_inner, "eta inner");
      },
      -14.0, 14.0, eta_outer, "eta outer");
  pass = pass && std::abs(eta_norm - 1.0) <= 1e-8;
  detail << "; (|Y|,Z) norm-1 = " << std::abs(eta_norm - 1.0) << " (<=1e-8)";

  return {pass, detail.str()};
}

// ---------------------------------------------------------------- 9
Outcome laplace_functional() {
  ExperimentPlan plan = default_plan("laplace");
  plan.seed = 0;
  plan.threads = kThreads;
  TestReport r = laplace_check(plan);
  bool pass = r.all_gated_pass();
  double worst = 0;
  for (const auto& s : r.statistics) {
    if (s.gated) worst = std::max(worst, std::abs(s.value));
  }
  double mills = 50.0 * local_time_laplace(50.0, 1.0);
  double target = std::sqrt(2.0 / std::numbers::pi);
  double rel = std::abs(mills / target - 1.0);
  pass = pass && rel <= 0.01;
  return {pass, "max |empirical - closed form| = " + fmt(worst) +
                    " (gate 0.01, theta in {0.5,1,2}, n=4096, R=1e5); "
                    "theta*transform at theta=50 off sqrt(2/pi) by " +
                    fmt(100 * rel) + "% (<=1%)"};
}

// ---------------------------------------------------------------- 10
Outcome levy_identity() {
  ExperimentPlan plan = default_plan("levy");
  plan.seed = 0;
  plan.threads = kThreads;
  TestReport r = levy_identity_check(plan);
  double a = r.find("ks_xi0_vs_max")->value;
  double b = r.find("ks_absend_vs_max_minus_end")->value;
  bool pass = a < 0.04 && b < 0.04;
  return {pass, "KS(xi0, M) = " + fmt(a) + ", KS(|S|, M-S) = " + fmt(b) +
                    " (gates 0.04, n=4096, R=5000)"};
}

// ---------------------------------------------------------------- 11
Outcome domain_d2() {
  DomainSpec spec;
  std::ostringstream detail;
  bool pass = true;

  // (a) 201x201 membership grid against the brute-force K-grid oracle.
  const int G = spec.oracle_resolution;
  std::vector<double> inv_cbrt(static_cast<std::size_t>(G));
  std::vector<double> inv_one_minus(static_cast<std::size_t>(G));
  for (int j = 0; j < G; ++j) {
    double K = static_cast<double>(j) / static_cast<double>(G - 1);
    inv_cbrt[static_cast<std::size_t>(j)] =
        j == 0 ? 0.0 : 1.0 / std::cbrt(K);
    inv_one_minus[static_cast<std::size_t>(j)] =
        j == G - 1 ? 0.0 : 1.0 / (1.0 - K);
  }
  std::atomic<std::int64_t> mismatches{0};
  parallel_for(201, kThreads, [&](std::int64_t i) {
    double u = 0.7 * static_cast<double>(i) / 200.0;
    double a1 = 3.0 * std::pow(u, 4.0 / 3.0) * std::pow(2.0, -2.0 / 3.0);
    for (int j = 0; j <= 200; ++j) {
      double v = 1.05 * static_cast<double>(j) / 200.0;
      double a2 = v * v;
      double best = std::numeric_limits<double>::infinity();
      if (u == 0.0) best = a2;        // K -> 0 closure
      if (v == 0.0) best = std::min(best, a1);  // K = 1 closure
      for (int k = 1; k + 1 < G; ++k) {
        double f = a1 * inv_cbrt[static_cast<std::size_t>(k)] +
                   a2 * inv_one_minus[static_cast<std::size_t>(k)];
        if (f < best) best = f;
      }
      bool oracle = best <= 1.0 + spec.membership_slack;
      if (oracle != d2_contains(u, v, spec)) {
        mismatches.fetch_add(1, std::memory_order_relaxed);
      }
    }
  });
  pass = pass && mismatches.load() == 0;
  detail << "oracle mismatches on 201x201 grid: " << mismatches.load();

  // (b) boundary endpoints.
  BoundaryPolyline polyline = trace_boundary(spec, 256);
  double e0 = std::hypot(polyline.points.front().first,
                         polyline.points.front().second - 1.0);
  double e1 = std::hypot(polyline.points.back().first - domain_b_max(),
                         polyline.points.back().second);
  pass = pass && e0 <= 1e-9 && e1 <= 1e-9;
  detail << "; endpoint errors " << e0 << ", " << e1 << " (<=1e-9)";

  // (c) K(B) against a grid search with step 1e-5 on 50 interior values.
  double worst_k = 0;
  for (int i = 1; i <= 50; ++i) {
    double B = domain_b_max() * static_cast<double>(i) / 51.0;
    double mine = K_of_B(B, spec);
    double best_a = -1.0, best_k = 0.0;
    for (int j = 1; j <= 100000; ++j) {
      double K = static_cast<double>(j) / 100000.0;
      double a = A_of_BK(B, K);
      if (a > best_a) {
        best_a = a;
        best_k = K;
      }
    }
    worst_k = std::max(worst_k, std::abs(mine - best_k));
  }
  pass = pass && worst_k < 1e-3;
  detail << "; max |K(B) - grid argmax| = " << worst_k << " (<1e-3)";

  // (d) closed-form identity of the energy of the example pair.
  RngStream rng(kSeed, 207);
  double worst_energy = 0;
  for (int i = 0; i < 100; ++i) {
    double B = rng.next_u01() * domain_b_max();
    double A = rng.next_u01();
    double K = 0.01 + 0.98 * rng.next_u01();
    auto [k, g] = example_kg(B, A, K, K);
    EnergyResult e = strassen_energy(k, g);
    double f = F_value(B, A, K);
    worst_energy = std::max(
        worst_energy, std::abs(e.energy - f) / std::max(1.0, std::abs(f)));
    if (e.orthogonality_violation != 0.0) pass = false;
  }
  pass = pass && worst_energy <= 1e-12;
  detail << "; max rel |energy - F| = " << worst_energy << " (<=1e-12)";

  return {pass, detail.str()};
}

// ---------------------------------------------------------------- 12
Outcome diagnostics_report_only() {
  std::ostringstream detail;
  bool pass = true;

  // Well-formed reports at n_max = 1e6.
  ExperimentPlan lil_plan = default_plan("lil");
  lil_plan.seed = 0;
  ExperimentArtifacts lil_art;
  TestReport lil_rep = lil_diagnostic(lil_plan, &lil_art);
  ExperimentPlan ch_plan = default_plan("chung-hirsch");
  ch_plan.seed = 0;
  ExperimentArtifacts ch_art;
  TestReport ch_rep = chung_hirsch_diagnostic(ch_plan, &ch_art);

  auto finite_entries = [](const TestReport& r) {
    for (const auto& s : r.statistics) {
      if (!std::isfinite(s.value)) return false;
      if (s.gated) return false;  // diagnostics must not gate
    }
    return !r.statistics.empty();
  };
  pass = pass && finite_entries(lil_rep) && finite_entries(ch_rep);
  pass = pass && !lil_art.lil_series.empty() && !ch_art.chung_series.empty();
  for (std::size_t i = 1; i < lil_art.lil_series.size(); ++i) {
    if (lil_art.lil_series[i].c1_running_sup <
        lil_art.lil_series[i - 1].c1_running_sup) {
      pass = false;
    }
  }
  detail << "reports at n_max=1e6 well-formed (" << lil_art.lil_series.size()
         << " checkpoints)";

  // Pilot band, recorded but never gated: 50 seeds at n_max = 1e7. The
  // two-sided |C2| statistic carries the same limsup constant and is the
  // one the band was calibrated on; the signed sup is recorded alongside.
  const int seeds = 50;
  std::vector<double> chung_inf(seeds), c2_sup(seeds), c2_abs_sup(seeds);
  parallel_for(seeds, kThreads, [&](std::int64_t s) {
    ExperimentPlan lp = default_plan("lil");
    lp.n_max = 10000000;
    lp.seed = 1000 + static_cast<std::uint64_t>(s);
    TestReport lr = lil_diagnostic(lp);
    c2_sup[static_cast<std::size_t>(s)] = lr.find("c2_lil_running_sup")->value;
    c2_abs_sup[static_cast<std::size_t>(s)] =
        lr.find("c2_lil_abs_running_sup")->value;
    ExperimentPlan cp = default_plan("chung-hirsch");
    cp.n_max = 10000000;
    cp.seed = 1000 + static_cast<std::uint64_t>(s);
    TestReport cr = chung_hirsch_diagnostic(cp);
    chung_inf[static_cast<std::size_t>(s)] = cr.find("chung_running_inf")->value;
  });
  auto in_band = [&](const std::vector<double>& v) {
    int c = 0;
    for (double x : v) {
      if (x >= 0.5 && x <= 1.5) ++c;
    }
    return 2 * c;  // percent of 50 seeds
  };
  detail << "; pilot n_max=1e7, 50 seeds, band [0.5,1.5]: chung inf "
         << in_band(chung_inf) << "%, c2-lil |sup| " << in_band(c2_abs_sup)
         << "% (signed sup " << in_band(c2_sup)
         << "%) -- recorded, not gated";
  return {pass, detail.str()};
}

// ---------------------------------------------------------------- 13
std::string normalize_report(const std::string& bytes) {
  auto j = nlohmann::json::parse(bytes);
  j["duration_ms"] = 0;
  return j.dump();
}

Outcome reproducibility() {
  const std::string cli = COMBWALK_CLI_PATH;
  struct Command {
    std::string args;
    std::vector<std::string> files;
  };
  const std::vector<Command> commands = {
      {"simulate --n 1000 --seed 7", {"path.csv"}},
      {"simulate --coupled --n 1000 --seed 7", {"path.csv"}},
      {"density --model dobrushin --grid -2:2:0.25", {"density_dobrushin.csv"}},
      {"density --model laplace --theta 0.5 --theta 1",
       {"density_laplace.csv"}},
      {"domain --trace --points 64", {"domain_boundary.csv"}},
      {"experiment --id c2-scaling --seed 11", {"report_c2_scaling.json"}},
      {"experiment --id joint --seed 11 --n 16384 --R 2000",
       {"report_joint.json", "histogram_joint.csv"}},
      {"experiment --id lil --n-max 100000 --seed 3",
       {"report_lil.json", "lil_series.csv"}},
  };
  const int threads[3] = {1, 4, 8};

  bool pass = true;
  std::ostringstream detail;
  int compared = 0;
  fs::path root = fs::temp_directory_path() / "combwalk_acceptance_repro";
  fs::remove_all(root);
  for (std::size_t c = 0; c < commands.size() && pass; ++c) {
    std::vector<std::vector<std::string>> contents(3);
    std::vector<int> codes(3);
    for (int t = 0; t < 3; ++t) {
      fs::path dir = root / ("cmd" + std::to_string(c) + "_t" +
                             std::to_string(threads[t]));
      fs::create_directories(dir);
      std::string full = cli + " " + commands[c].args + " --threads " +
                         std::to_string(threads[t]) + " --out " +
                         dir.string() + " >/dev/null 2>&1";
      codes[static_cast<std::size_t>(t)] = WEXITSTATUS(std::system(full.c_str()));
      for (const auto& f : commands[c].files) {
        std::ifstream in(dir / f, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string data = buf.str();
        if (f.ends_with(".json") && f.rfind("report_", 0) == 0) {
          data = normalize_report(data);  // timing is the one mutable field
        }
        contents[static_cast<std::size_t>(t)].push_back(data);
      }
    }
    if (codes[0] != codes[1] || codes[0] != codes[2]) {
      pass = false;
      detail << "exit codes differ for: " << commands[c].args;
      break;
    }
    for (std::size_t f = 0; f < commands[c].files.size(); ++f) {
      if (contents[0][f].empty() || contents[0][f] != contents[1][f] ||
          contents[0][f] != contents[2][f]) {
        pass = false;
        detail << "bytes differ for " << commands[c].files[f] << " of: "
               << commands[c].args;
      }
      ++compared;
    }
  }
  if (pass) {
    detail << compared << " files byte-identical across threads {1,4,8} "
           << "(report timing field excluded)";
  }
  return {pass, detail.str()};
}

struct Criterion {
  int id;
  std::string label;
  std::function<Outcome()> fn;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "structural exactness of sampled paths", structural_exactness},
      {2, "transition frequencies", transition_frequencies},
      {3, "local-time identities", local_time_identities},
      {4, "coupling fidelity", coupling_fidelity},
      {5, "sign-reconstruction of the reflected walk", sign_reconstruction},
      {6, "marginal scaling limits", marginal_scaling},
      {7, "joint scaling limit", joint_limit},
      {8, "quadrature identities", quadrature_identities},
      {9, "local-time Laplace functional", laplace_functional},
      {10, "discrete Levy identity", levy_identity},
      {11, "limit-point domain D2", domain_d2},
      {12, "report-only asymptotic diagnostics", diagnostics_report_only},
      {13, "byte-level reproducibility across thread counts", reproducibility},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (arg == "--list") {
      for (const auto& c : criteria) {
        std::cout << c.id << ": " << c.label << "\n";
      }
      return 0;
    } else {
      std::cerr << "usage: acceptance [--only K] [--list]\n";
      return 2;
    }
  }

  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.fn();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << "criterion "
              << c.id << ": " << c.label << " -- " << outcome.detail << " ["
              << fmt(secs) << " s]\n";
    if (!outcome.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
