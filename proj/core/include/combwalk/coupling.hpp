#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "combwalk/local_time.hpp"
#include "combwalk/rng.hpp"
#include "combwalk/walk.hpp"

namespace combwalk {

/// Inverse CDF of the geometric law P(G = k) = 2^-(k+1), k = 0,1,2,...
/// (the axis dwell-time law of the coupling).
inline int geometric_icdf(double u) {
  if (!(u >= 0.0 && u < 1.0)) {
    throw std::invalid_argument("geometric_icdf: u must lie in [0,1)");
  }
  int k = 0;
  double tail = 0.5;  // P(G > k)
  while (u >= 1.0 - tail) {
    ++k;
    tail *= 0.5;
  }
  return k;
}

/// Draws from P(G = k) = 2^-(k+1) by counting leading one bits of a uniform
/// word, which is the inverse CDF applied to the 64-bit uniform.
inline int sample_geometric(RngStream& rng) {
  std::uint64_t r = rng.next_u64();
  return std::countl_one(r);
}

/// The driving variables of the coupling: geometric dwell times G, their
/// partial sums T_N = G_1 + ... + G_N (T[0] = 0), and the return times of
/// the tooth walk S2, as far as the construction materialized them.
struct CouplingSchedule {
  std::vector<std::int64_t> G;
  std::vector<std::int64_t> T;
  ReturnTimes rho2;
};

enum class Phase : std::uint8_t { Axis = 0, Tooth = 1 };

/// Comb path built from (S1, S2, {G_i}) with per-step provenance. During
/// axis phase N the walker tracks S1 and C2 = 0; during tooth phase N,
/// C1 is frozen at S1(T_{N+1}) and C2 tracks the (N+1)-th excursion of S2.
struct CoupledCombPath {
  CombPath path;
  std::vector<Phase> phase;              // tag of step i (size == steps)
  std::vector<std::int64_t> phase_index;  // N of step i
  CouplingSchedule schedule;
};

/// The case analysis of the construction applied to explicit inputs:
/// on T_N + rho2(N) < n <= T_{N+1} + rho2(N), C1(n) = S1(n - rho2(N)) and
/// C2(n) = 0; on T_{N+1} + rho2(N) < n <= T_{N+1} + rho2(N+1), C1 is frozen
/// and C2(n) = S2(n - T_{N+1}). Inputs too short for the horizon are
/// rejected with the phase reached.
CoupledCombPath build_comb_from_pair(const SimpleWalkPath& s1,
                                     const SimpleWalkPath& s2,
                                     const std::vector<std::int64_t>& g,
                                     std::int64_t n);

/// Samples the coupled walk directly; S1, S2 and {G_i} are generated on
/// demand from three substreams of rng (0, 1, 2), so the number of phases
/// adapts to the horizon.
CoupledCombPath sample_coupled_comb_path(std::int64_t n, const RngStream& rng);

/// Endpoint-only coupled sampler (no path storage). If axis_occupation is
/// given it receives #{ i in 1..n : C2(i) = 0 }.
Site sample_coupled_endpoint(std::int64_t n, const RngStream& rng,
                             std::int64_t* axis_occupation = nullptr);

/// Endpoint-only direct sampler from the transition kernel.
Site sample_comb_endpoint(std::int64_t n, RngStream& rng,
                          std::int64_t* axis_occupation = nullptr);

struct CouplingCheckReport {
  std::int64_t horizon = 0;
  std::int64_t replicas = 0;
  double ks_c1 = 0;  // coupled vs direct endpoint law, first coordinate
  double ks_c2 = 0;
  double axis_fraction_coupled = 0;
  double axis_fraction_direct = 0;
};

/// Two-sample comparison of coupled vs direct endpoint laws per coordinate,
/// plus the axis-occupation fractions. Deterministic given (n, replicas,
/// rng); thread count never changes the result.
CouplingCheckReport coupling_distribution_check(std::int64_t n,
                                                std::int64_t replicas,
                                                const RngStream& rng,
                                                int threads = 1);

struct PhaseCountReport {
  std::int64_t horizon = 0;
  std::int64_t phase_index = 0;   // N at time n
  std::int64_t xi2_zero = 0;      // xi_2(0,n), local time of S2 at zero
  double normalized_gap = 0;      // |xi2 - N| / n^{1/4}
};

/// Reports the gap xi_2(0,n) - N of the phase bookkeeping; diagnostic only.
PhaseCountReport phase_count_diagnostic(std::int64_t n, const RngStream& rng);

}  // namespace combwalk
