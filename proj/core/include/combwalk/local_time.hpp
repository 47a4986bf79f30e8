#pragma once

#include <cstdint>
#include <vector>

#include "combwalk/rng.hpp"
#include "combwalk/walk.hpp"

namespace combwalk {

/// Visit counts xi(k,n) = #{ i : 1 <= i <= n, S(i) = k }. Counting starts
/// at i = 1, so S(0) = 0 is excluded and xi(0, rho(N)) = N holds exactly.
struct LocalTimeTable {
  std::int64_t horizon = 0;
  std::int64_t min_level = 0;
  std::vector<std::int64_t> counts;  // counts[k - min_level]

  std::int64_t count(std::int64_t level) const {
    std::int64_t idx = level - min_level;
    if (idx < 0 || idx >= static_cast<std::int64_t>(counts.size())) return 0;
    return counts[static_cast<std::size_t>(idx)];
  }
  std::int64_t total() const;
};

LocalTimeTable local_time_table(const SimpleWalkPath& path,
                                std::int64_t horizon);

std::int64_t local_time(const SimpleWalkPath& path, std::int64_t level,
                        std::int64_t horizon);

/// Return times to zero: rho[0] = 0 and rho[N] is the time of the N-th
/// return, i.e. S(rho[N]) = 0 with no zero of S strictly between returns.
struct ReturnTimes {
  std::vector<std::int64_t> rho;

  std::int64_t returns() const {
    return static_cast<std::int64_t>(rho.size()) - 1;
  }
};

ReturnTimes return_times(const SimpleWalkPath& path);

/// M(i) = max_{0 <= j <= i} S(j).
std::vector<std::int64_t> running_max(const SimpleWalkPath& path);

/// Maximal zero-free intervals of a reflected path. An interval (begin,end)
/// has r(begin) = 0, r strictly positive on (begin,end), and r(end) = 0
/// unless it is the final incomplete excursion cut by the horizon.
struct ExcursionDecomposition {
  struct Interval {
    std::int64_t begin = 0;
    std::int64_t end = 0;
  };
  std::vector<Interval> intervals;
  bool incomplete_tail = false;
};

ExcursionDecomposition decompose_excursions(
    const std::vector<std::int64_t>& reflected);

/// Multiplies every maximal excursion of a reflected path by an independent
/// +-1 sign (probability 1/2 each, in interval order); the final incomplete
/// excursion is signed as well. |result(i)| == reflected(i) for all i.
SimpleWalkPath sign_excursions(const std::vector<std::int64_t>& reflected,
                               RngStream& signs);

}  // namespace combwalk
