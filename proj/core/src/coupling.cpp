#include "combwalk/coupling.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "combwalk/parallel.hpp"
#include "combwalk/stats.hpp"

namespace combwalk {

namespace {

/// Streaming form of the construction: axis phases burn a geometric budget
/// of S1 steps, tooth phases run one S2 excursion to completion. Never
/// generates input beyond the requested horizon.
class CoupledWalker {
 public:
  explicit CoupledWalker(const RngStream& base)
      : s1_(base.substream(0)), s2_(base.substream(1)), g_(base.substream(2)) {
    axis_budget_ = sample_geometric(g_);
    g_draws_.push_back(axis_budget_);
  }

  void step() {
    if (axis_budget_ > 0) {
      c1_ += simple_walk_step(s1_.next_u01());
      --axis_budget_;
      last_phase_ = Phase::Axis;
      last_phase_index_ = n_completed_;
    } else {
      c2_ += simple_walk_step(s2_.next_u01());
      ++s2_time_;
      last_phase_ = Phase::Tooth;
      last_phase_index_ = n_completed_;
      if (c2_ == 0) {
        rho2_.push_back(s2_time_);
        ++n_completed_;
        axis_budget_ = sample_geometric(g_);
        g_draws_.push_back(axis_budget_);
      }
    }
  }

  std::int64_t c1() const { return c1_; }
  std::int64_t c2() const { return c2_; }
  std::int64_t completed_excursions() const { return n_completed_; }
  Phase last_phase() const { return last_phase_; }
  std::int64_t last_phase_index() const { return last_phase_index_; }

  /// Extends the S2 walk alone to s2-time target and returns xi_2(0,target).
  std::int64_t xi2_at(std::int64_t target) {
    std::int64_t zeros = static_cast<std::int64_t>(rho2_.size());
    std::int64_t v = c2_;
    while (s2_time_ < target) {
      v += simple_walk_step(s2_.next_u01());
      ++s2_time_;
      if (v == 0) ++zeros;
    }
    return zeros;
  }

  CouplingSchedule schedule() const {
    CouplingSchedule sched;
    sched.G = g_draws_;
    sched.T.resize(g_draws_.size() + 1, 0);
    for (std::size_t i = 0; i < g_draws_.size(); ++i) {
      sched.T[i + 1] = sched.T[i] + g_draws_[i];
    }
    sched.rho2.rho.push_back(0);
    sched.rho2.rho.insert(sched.rho2.rho.end(), rho2_.begin(), rho2_.end());
    return sched;
  }

 private:
  RngStream s1_, s2_, g_;
  std::int64_t c1_ = 0, c2_ = 0;
  std::int64_t axis_budget_ = 0;
  std::int64_t n_completed_ = 0;  // N, completed tooth excursions
  std::int64_t s2_time_ = 0;
  Phase last_phase_ = Phase::Axis;
  std::int64_t last_phase_index_ = 0;
  std::vector<std::int64_t> g_draws_;
  std::vector<std::int64_t> rho2_;
};

}  // namespace

CoupledCombPath build_comb_from_pair(const SimpleWalkPath& s1,
                                     const SimpleWalkPath& s2,
                                     const std::vector<std::int64_t>& g,
                                     std::int64_t n) {
  if (n < 0) throw std::invalid_argument("build_comb_from_pair: n < 0");
  if (!is_legal_simple_walk(s1) || !is_legal_simple_walk(s2)) {
    throw std::invalid_argument("build_comb_from_pair: illegal input walk");
  }
  for (std::int64_t gk : g) {
    if (gk < 0) throw std::invalid_argument("build_comb_from_pair: G_k < 0");
  }

  CoupledCombPath out;
  out.path.sites.reserve(static_cast<std::size_t>(n) + 1);
  out.path.sites.push_back(Site{0, 0});
  out.phase.reserve(static_cast<std::size_t>(n));
  out.phase_index.reserve(static_cast<std::size_t>(n));

  std::int64_t N = 0;          // completed excursions
  std::size_t gi = 0;          // next G to consume
  std::int64_t i1 = 0, i2 = 0;  // indices into S1, S2
  auto next_budget = [&](std::int64_t phase) -> std::int64_t {
    if (gi >= g.size()) {
      throw std::invalid_argument(
          "build_comb_from_pair: G exhausted entering axis phase N=" +
          std::to_string(phase));
    }
    return g[gi++];
  };
  std::int64_t axis_budget = n > 0 ? next_budget(0) : 0;

  for (std::int64_t step = 1; step <= n; ++step) {
    if (axis_budget > 0) {
      ++i1;
      if (i1 > s1.steps()) {
        throw std::invalid_argument(
            "build_comb_from_pair: S1 exhausted during axis phase N=" +
            std::to_string(N));
      }
      --axis_budget;
      out.phase.push_back(Phase::Axis);
      out.phase_index.push_back(N);
      out.path.sites.push_back(
          Site{s1.values[static_cast<std::size_t>(i1)], 0});
    } else {
      ++i2;
      if (i2 > s2.steps()) {
        throw std::invalid_argument(
            "build_comb_from_pair: S2 exhausted during tooth phase N=" +
            std::to_string(N));
      }
      std::int64_t v = s2.values[static_cast<std::size_t>(i2)];
      out.phase.push_back(Phase::Tooth);
      out.phase_index.push_back(N);
      out.path.sites.push_back(
          Site{s1.values[static_cast<std::size_t>(i1)], v});
      if (v == 0) {
        ++N;
        if (step < n) axis_budget = next_budget(N);
      }
    }
  }

  out.schedule.G.assign(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(gi));
  out.schedule.T.resize(gi + 1, 0);
  for (std::size_t i = 0; i < gi; ++i) {
    out.schedule.T[i + 1] = out.schedule.T[i] + out.schedule.G[i];
  }
  out.schedule.rho2.rho.push_back(0);
  for (std::int64_t j = 1; j <= i2; ++j) {
    if (s2.values[static_cast<std::size_t>(j)] == 0) {
      out.schedule.rho2.rho.push_back(j);
    }
  }
  return out;
}

CoupledCombPath sample_coupled_comb_path(std::int64_t n,
                                         const RngStream& rng) {
  if (n < 0) throw std::invalid_argument("sample_coupled_comb_path: n < 0");
  CoupledWalker walker(rng);
  CoupledCombPath out;
  out.path.sites.reserve(static_cast<std::size_t>(n) + 1);
  out.path.sites.push_back(Site{0, 0});
  out.phase.reserve(static_cast<std::size_t>(n));
  out.phase_index.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    walker.step();
    out.path.sites.push_back(Site{walker.c1(), walker.c2()});
    out.phase.push_back(walker.last_phase());
    out.phase_index.push_back(walker.last_phase_index());
  }
  out.schedule = walker.schedule();
  return out;
}

Site sample_coupled_endpoint(std::int64_t n, const RngStream& rng,
                             std::int64_t* axis_occupation) {
  CoupledWalker walker(rng);
  std::int64_t on_axis = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    walker.step();
    if (walker.c2() == 0) ++on_axis;
  }
  if (axis_occupation) *axis_occupation = on_axis;
  return Site{walker.c1(), walker.c2()};
}

Site sample_comb_endpoint(std::int64_t n, RngStream& rng,
                          std::int64_t* axis_occupation) {
  Site pos{0, 0};
  std::int64_t on_axis = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    pos = step_comb(pos, rng.next_u01());
    if (pos.y == 0) ++on_axis;
  }
  if (axis_occupation) *axis_occupation = on_axis;
  return pos;
}

CouplingCheckReport coupling_distribution_check(std::int64_t n,
                                                std::int64_t replicas,
                                                const RngStream& rng,
                                                int threads) {
  if (n < 1) throw std::invalid_argument("coupling check: n must be >= 1");
  if (replicas < 100) {
    throw std::invalid_argument("coupling check: need >= 100 replicas");
  }

  std::vector<double> c1_coupled(static_cast<std::size_t>(replicas));
  std::vector<double> c2_coupled(static_cast<std::size_t>(replicas));
  std::vector<double> c1_direct(static_cast<std::size_t>(replicas));
  std::vector<double> c2_direct(static_cast<std::size_t>(replicas));
  std::vector<std::int64_t> axis_coupled(static_cast<std::size_t>(replicas));
  std::vector<std::int64_t> axis_direct(static_cast<std::size_t>(replicas));

  parallel_for(replicas, threads, [&](std::int64_t r) {
    auto idx = static_cast<std::size_t>(r);
    RngStream coupled_rng = rng.substream(2 * static_cast<std::uint64_t>(r));
    Site a = sample_coupled_endpoint(n, coupled_rng, &axis_coupled[idx]);
    c1_coupled[idx] = static_cast<double>(a.x);
    c2_coupled[idx] = static_cast<double>(a.y);

    RngStream direct_rng =
        rng.substream(2 * static_cast<std::uint64_t>(r) + 1);
    Site b = sample_comb_endpoint(n, direct_rng, &axis_direct[idx]);
    c1_direct[idx] = static_cast<double>(b.x);
    c2_direct[idx] = static_cast<double>(b.y);
  });

  CouplingCheckReport report;
  report.horizon = n;
  report.replicas = replicas;
  report.ks_c1 = ks_two_sample(c1_coupled, c1_direct);
  report.ks_c2 = ks_two_sample(c2_coupled, c2_direct);
  auto fraction = [n, replicas](const std::vector<std::int64_t>& counts) {
    double s = 0;
    for (std::int64_t c : counts) s += static_cast<double>(c);
    return s / (static_cast<double>(n) * static_cast<double>(replicas));
  };
  report.axis_fraction_coupled = fraction(axis_coupled);
  report.axis_fraction_direct = fraction(axis_direct);
  return report;
}

PhaseCountReport phase_count_diagnostic(std::int64_t n, const RngStream& rng) {
  if (n < 1000) {
    throw std::invalid_argument("phase_count_diagnostic: n must be >= 1000");
  }
  CoupledWalker walker(rng);
  for (std::int64_t i = 0; i < n; ++i) walker.step();
  PhaseCountReport report;
  report.horizon = n;
  report.phase_index = walker.completed_excursions();
  report.xi2_zero = walker.xi2_at(n);
  report.normalized_gap =
      static_cast<double>(std::abs(report.xi2_zero - report.phase_index)) /
      std::pow(static_cast<double>(n), 0.25);
  return report;
}

}  // namespace combwalk
