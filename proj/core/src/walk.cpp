#include "combwalk/walk.hpp"

namespace combwalk {

std::vector<Site> neighbors(Site s) {
  if (s.y != 0) {
    return {Site{s.x, s.y + 1}, Site{s.x, s.y - 1}};
  }
  return {Site{s.x + 1, 0}, Site{s.x - 1, 0}, Site{s.x, 1}, Site{s.x, -1}};
}

bool is_legal_comb_path(const CombPath& path) {
  if (path.sites.empty()) return false;
  if (!(path.sites.front() == Site{0, 0})) return false;
  for (std::size_t i = 1; i < path.sites.size(); ++i) {
    if (!is_comb_edge(path.sites[i - 1], path.sites[i])) return false;
  }
  return true;
}

CombPath sample_comb_path(std::int64_t n, RngStream& rng) {
  if (n < 0) throw std::invalid_argument("sample_comb_path: n must be >= 0");
  CombPath path;
  path.sites.reserve(static_cast<std::size_t>(n) + 1);
  Site pos{0, 0};
  path.sites.push_back(pos);
  for (std::int64_t i = 0; i < n; ++i) {
    pos = step_comb(pos, rng.next_u01());
    path.sites.push_back(pos);
  }
  return path;
}

bool is_legal_simple_walk(const SimpleWalkPath& path) {
  if (path.values.empty()) return false;
  if (path.values.front() != 0) return false;
  for (std::size_t i = 1; i < path.values.size(); ++i) {
    std::int64_t d = path.values[i] - path.values[i - 1];
    if (d != 1 && d != -1) return false;
  }
  return true;
}

SimpleWalkPath sample_simple_walk(std::int64_t n, RngStream& rng) {
  if (n < 0) throw std::invalid_argument("sample_simple_walk: n must be >= 0");
  SimpleWalkPath path;
  path.values.reserve(static_cast<std::size_t>(n) + 1);
  std::int64_t s = 0;
  path.values.push_back(s);
  for (std::int64_t i = 0; i < n; ++i) {
    s += simple_walk_step(rng.next_u01());
    path.values.push_back(s);
  }
  return path;
}

}  // namespace combwalk
