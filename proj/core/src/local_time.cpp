#include "combwalk/local_time.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace combwalk {

std::int64_t LocalTimeTable::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

LocalTimeTable local_time_table(const SimpleWalkPath& path,
                                std::int64_t horizon) {
  if (horizon < 0 || horizon >= static_cast<std::int64_t>(path.values.size())) {
    throw std::out_of_range("local_time_table: horizon beyond path length");
  }
  LocalTimeTable table;
  table.horizon = horizon;
  if (horizon == 0) return table;

  auto [lo, hi] = std::minmax_element(path.values.begin() + 1,
                                      path.values.begin() + 1 + horizon);
  table.min_level = *lo;
  table.counts.assign(static_cast<std::size_t>(*hi - *lo + 1), 0);
  for (std::int64_t i = 1; i <= horizon; ++i) {
    ++table.counts[static_cast<std::size_t>(path.values[static_cast<std::size_t>(i)] -
                                            table.min_level)];
  }
  return table;
}

std::int64_t local_time(const SimpleWalkPath& path, std::int64_t level,
                        std::int64_t horizon) {
  if (horizon < 0 || horizon >= static_cast<std::int64_t>(path.values.size())) {
    throw std::out_of_range("local_time: horizon beyond path length");
  }
  std::int64_t count = 0;
  for (std::int64_t i = 1; i <= horizon; ++i) {
    if (path.values[static_cast<std::size_t>(i)] == level) ++count;
  }
  return count;
}

ReturnTimes return_times(const SimpleWalkPath& path) {
  ReturnTimes rt;
  rt.rho.push_back(0);
  for (std::size_t i = 1; i < path.values.size(); ++i) {
    if (path.values[i] == 0) rt.rho.push_back(static_cast<std::int64_t>(i));
  }
  return rt;
}

std::vector<std::int64_t> running_max(const SimpleWalkPath& path) {
  std::vector<std::int64_t> m;
  m.reserve(path.values.size());
  std::int64_t cur = path.values.empty() ? 0 : path.values.front();
  for (std::int64_t v : path.values) {
    cur = std::max(cur, v);
    m.push_back(cur);
  }
  return m;
}

namespace {

void check_reflected(const std::vector<std::int64_t>& reflected) {
  if (reflected.empty() || reflected.front() != 0) {
    throw std::invalid_argument("reflected path must start at 0");
  }
  for (std::size_t i = 1; i < reflected.size(); ++i) {
    if (reflected[i] < 0) {
      throw std::invalid_argument("reflected path must be nonnegative");
    }
    std::int64_t d = reflected[i] - reflected[i - 1];
    if (d != 1 && d != -1) {
      throw std::invalid_argument("reflected path must move by +-1");
    }
  }
}

}  // namespace

ExcursionDecomposition decompose_excursions(
    const std::vector<std::int64_t>& reflected) {
  check_reflected(reflected);
  ExcursionDecomposition dec;
  std::int64_t last = static_cast<std::int64_t>(reflected.size()) - 1;
  std::int64_t begin = -1;
  for (std::int64_t i = 0; i <= last; ++i) {
    if (reflected[static_cast<std::size_t>(i)] == 0) {
      if (begin >= 0) {
        dec.intervals.push_back({begin, i});
        begin = -1;
      }
      begin = i;  // a zero opens the next excursion
    }
  }
  // Path ends strictly above zero: the open excursion is cut by the horizon.
  if (begin >= 0 && reflected.back() != 0) {
    dec.intervals.push_back({begin, last});
    dec.incomplete_tail = true;
  }
  return dec;
}

SimpleWalkPath sign_excursions(const std::vector<std::int64_t>& reflected,
                               RngStream& signs) {
  ExcursionDecomposition dec = decompose_excursions(reflected);
  SimpleWalkPath out;
  out.values.assign(reflected.size(), 0);
  for (const auto& iv : dec.intervals) {
    std::int64_t sign = signs.next_u01() < 0.5 ? 1 : -1;
    for (std::int64_t i = iv.begin + 1; i <= iv.end; ++i) {
      out.values[static_cast<std::size_t>(i)] =
          sign * reflected[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

}  // namespace combwalk
