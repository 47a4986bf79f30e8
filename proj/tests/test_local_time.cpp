#include <doctest.h>

#include <cstdlib>

#include "combwalk/local_time.hpp"
#include "combwalk/rng.hpp"

using namespace combwalk;

namespace {

SimpleWalkPath path_of(std::initializer_list<std::int64_t> values) {
  SimpleWalkPath p;
  p.values = values;
  return p;
}

std::vector<std::int64_t> reflect(const SimpleWalkPath& p) {
  std::vector<std::int64_t> r;
  r.reserve(p.values.size());
  for (std::int64_t v : p.values) r.push_back(std::abs(v));
  return r;
}

}  // namespace

TEST_CASE("local_time counts visits from i = 1") {
  SimpleWalkPath p = path_of({0, 1, 0, 1, 2});
  CHECK(local_time(p, 0, 4) == 1);
  CHECK(local_time(p, 1, 4) == 2);
  CHECK(local_time(p, 2, 4) == 1);
  CHECK_THROWS_AS(local_time(p, 0, 5), std::out_of_range);
}

TEST_CASE("partition identity: level counts sum to the horizon") {
  RngStream rng(4, 0);
  SimpleWalkPath p = sample_simple_walk(20000, rng);
  for (std::int64_t horizon : {0L, 1L, 777L, 20000L}) {
    LocalTimeTable t = local_time_table(p, horizon);
    CHECK(t.total() == horizon);
  }
  LocalTimeTable t = local_time_table(p, 20000);
  CHECK(t.count(0) == local_time(p, 0, 20000));
  CHECK(t.count(999999) == 0);
}

TEST_CASE("local time is non-decreasing in the horizon") {
  RngStream rng(5, 0);
  SimpleWalkPath p = sample_simple_walk(2048, rng);
  std::int64_t prev = 0;
  for (std::int64_t n = 0; n <= 2048; n += 64) {
    std::int64_t cur = local_time(p, 1, n);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("return_times examples and the xi(0, rho(N)) = N identity") {
  ReturnTimes rt = return_times(path_of({0, 1, 0, 1, 2}));
  CHECK(rt.rho == std::vector<std::int64_t>{0, 2});
  rt = return_times(path_of({0, 1, 2, 1, 0, -1, 0}));
  CHECK(rt.rho == std::vector<std::int64_t>{0, 4, 6});

  RngStream rng(6, 0);
  SimpleWalkPath p = sample_simple_walk(1000000, rng);
  ReturnTimes returns = return_times(p);
  REQUIRE(returns.returns() > 0);
  for (std::int64_t N = 1; N <= returns.returns(); ++N) {
    CHECK(local_time(p, 0, returns.rho[static_cast<std::size_t>(N)]) == N);
    CHECK(p.values[static_cast<std::size_t>(
              returns.rho[static_cast<std::size_t>(N)])] == 0);
  }
}

TEST_CASE("running_max examples and domination") {
  CHECK(running_max(path_of({0, 1, 0, 1, 2})) ==
        std::vector<std::int64_t>{0, 1, 1, 1, 2});
  CHECK(running_max(path_of({0, -1, -2})) ==
        std::vector<std::int64_t>{0, 0, 0});
  RngStream rng(7, 0);
  SimpleWalkPath p = sample_simple_walk(4096, rng);
  auto m = running_max(p);
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    CHECK(m[i] >= p.values[i]);
    if (i > 0) CHECK(m[i] >= m[i - 1]);
  }
}

TEST_CASE("decompose_excursions finds maximal zero-free intervals") {
  auto dec = decompose_excursions({0, 1, 0, 1, 2, 1, 0});
  REQUIRE(dec.intervals.size() == 2);
  CHECK(dec.intervals[0].begin == 0);
  CHECK(dec.intervals[0].end == 2);
  CHECK(dec.intervals[1].begin == 2);
  CHECK(dec.intervals[1].end == 6);
  CHECK(!dec.incomplete_tail);

  dec = decompose_excursions({0, 1, 0});
  REQUIRE(dec.intervals.size() == 1);
  CHECK(dec.intervals[0].begin == 0);
  CHECK(dec.intervals[0].end == 2);

  dec = decompose_excursions({0, 1, 2});
  REQUIRE(dec.intervals.size() == 1);
  CHECK(dec.incomplete_tail);
  CHECK(dec.intervals[0].end == 2);

  CHECK_THROWS_AS(decompose_excursions({0, -1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(decompose_excursions({0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(decompose_excursions({1, 2}), std::invalid_argument);
}

TEST_CASE("excursion intervals partition the nonzero indices") {
  RngStream rng(8, 0);
  SimpleWalkPath p = sample_simple_walk(5000, rng);
  auto r = reflect(p);
  auto dec = decompose_excursions(r);
  std::vector<bool> covered(r.size(), false);
  for (const auto& iv : dec.intervals) {
    for (std::int64_t i = iv.begin + 1; i < iv.end; ++i) {
      CHECK(r[static_cast<std::size_t>(i)] > 0);
      covered[static_cast<std::size_t>(i)] = true;
    }
    CHECK(r[static_cast<std::size_t>(iv.begin)] == 0);
    if (!(dec.incomplete_tail && &iv == &dec.intervals.back())) {
      CHECK(r[static_cast<std::size_t>(iv.end)] == 0);
    } else {
      covered[static_cast<std::size_t>(iv.end)] = true;
    }
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] > 0) CHECK(covered[i]);
  }
}

TEST_CASE("sign_excursions keeps the reflection and signs whole excursions") {
  // Find substreams whose first draw picks each sign; both outputs occur.
  bool saw_plus = false, saw_minus = false;
  RngStream base(10, 0);
  for (std::uint64_t k = 0; k < 16 && !(saw_plus && saw_minus); ++k) {
    RngStream s = base.substream(k);
    SimpleWalkPath out = sign_excursions({0, 1, 0}, s);
    if (out.values == std::vector<std::int64_t>{0, 1, 0}) saw_plus = true;
    if (out.values == std::vector<std::int64_t>{0, -1, 0}) saw_minus = true;
  }
  CHECK(saw_plus);
  CHECK(saw_minus);

  RngStream rng(11, 0);
  SimpleWalkPath p = sample_simple_walk(4096, rng);
  auto r = reflect(p);
  RngStream signs(12, 0);
  SimpleWalkPath out = sign_excursions(r, signs);
  REQUIRE(out.values.size() == r.size());
  CHECK(is_legal_simple_walk(out));
  for (std::size_t i = 0; i < r.size(); ++i) {
    CHECK(std::abs(out.values[i]) == r[i]);
  }
  // Signs are constant within an excursion.
  auto dec = decompose_excursions(r);
  for (const auto& iv : dec.intervals) {
    int sign = out.values[static_cast<std::size_t>(iv.begin) + 1] > 0 ? 1 : -1;
    for (std::int64_t i = iv.begin + 1; i <= iv.end; ++i) {
      if (r[static_cast<std::size_t>(i)] != 0) {
        CHECK(out.values[static_cast<std::size_t>(i)] ==
              sign * r[static_cast<std::size_t>(i)]);
      }
    }
  }
}
