#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "combwalk/rng.hpp"

namespace combwalk {

/// Lattice site of the 2-dimensional comb: the integer lattice with all
/// horizontal edges off the x-axis removed. Sites on the axis have 4
/// neighbors, sites on a tooth have 2.
struct Site {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Site&, const Site&) = default;
};

inline int degree(Site s) { return s.y == 0 ? 4 : 2; }

std::vector<Site> neighbors(Site s);

/// True iff {a,b} is an edge of the comb: a vertical step, or a horizontal
/// step along the axis.
inline bool is_comb_edge(Site a, Site b) {
  if (a.x == b.x) {
    std::int64_t dy = b.y - a.y;
    return dy == 1 || dy == -1;
  }
  if (a.y == 0 && b.y == 0) {
    std::int64_t dx = b.x - a.x;
    return dx == 1 || dx == -1;
  }
  return false;
}

/// Deterministic inverse-CDF step of the comb walk. On the axis the
/// quartiles of u map, in this fixed order, to (x+1,0), (x-1,0), (x,1),
/// (x,-1); off the axis u < 1/2 moves up, otherwise down.
inline Site step_comb(Site s, double u) {
  if (!(u >= 0.0 && u < 1.0)) {
    throw std::invalid_argument("step_comb: u must lie in [0,1)");
  }
  if (s.y != 0) {
    return u < 0.5 ? Site{s.x, s.y + 1} : Site{s.x, s.y - 1};
  }
  if (u < 0.25) return Site{s.x + 1, 0};
  if (u < 0.50) return Site{s.x - 1, 0};
  if (u < 0.75) return Site{s.x, 1};
  return Site{s.x, -1};
}

/// Finite trajectory on the comb, origin first; sites.size() == steps + 1.
struct CombPath {
  std::vector<Site> sites;

  std::int64_t steps() const {
    return static_cast<std::int64_t>(sites.size()) - 1;
  }
  Site endpoint() const { return sites.back(); }
};

bool is_legal_comb_path(const CombPath& path);

CombPath sample_comb_path(std::int64_t n, RngStream& rng);

/// +1 if u < 1/2, else -1; the shared increment convention of both
/// 1-dimensional samplers.
inline int simple_walk_step(double u) { return u < 0.5 ? 1 : -1; }

/// Simple symmetric random walk on Z: values[0] = 0, increments +-1.
struct SimpleWalkPath {
  std::vector<std::int64_t> values;

  std::int64_t steps() const {
    return static_cast<std::int64_t>(values.size()) - 1;
  }
  std::int64_t endpoint() const { return values.back(); }
};

bool is_legal_simple_walk(const SimpleWalkPath& path);

SimpleWalkPath sample_simple_walk(std::int64_t n, RngStream& rng);

}  // namespace combwalk
