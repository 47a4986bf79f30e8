#include <benchmark/benchmark.h>

#include "combwalk/coupling.hpp"
#include "combwalk/densities.hpp"
#include "combwalk/rng.hpp"
#include "combwalk/stats.hpp"
#include "combwalk/walk.hpp"

namespace {

void BM_RngU01(benchmark::State& state) {
  combwalk::RngStream rng(1, 2);
  double acc = 0;
  for (auto _ : state) acc += rng.next_u01();
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_RngU01);

void BM_DirectCombWalk(benchmark::State& state) {
  combwalk::RngStream rng(1, 2);
  const auto n = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) {
    combwalk::Site end = combwalk::sample_comb_endpoint(n, rng);
    benchmark::DoNotOptimize(end);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_DirectCombWalk)->Arg(1 << 12)->Arg(1 << 16);

void BM_CoupledCombWalk(benchmark::State& state) {
  combwalk::RngStream base(1, 2);
  const auto n = static_cast<std::int64_t>(state.range(0));
  std::uint64_t replica = 0;
  for (auto _ : state) {
    combwalk::Site end =
        combwalk::sample_coupled_endpoint(n, base.substream(replica++));
    benchmark::DoNotOptimize(end);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_CoupledCombWalk)->Arg(1 << 12)->Arg(1 << 16);

void BM_DobrushinDensity(benchmark::State& state) {
  double u = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(combwalk::dobrushin_density(u));
    u += 1e-3;
    if (u > 3.0) u = 0.0;
  }
}
BENCHMARK(BM_DobrushinDensity);

void BM_JointDensity(benchmark::State& state) {
  double u = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(combwalk::joint_density_uz(u, 0.7));
    u += 1e-3;
    if (u > 3.0) u = 0.0;
  }
}
BENCHMARK(BM_JointDensity);

void BM_KsTwoSample(benchmark::State& state) {
  combwalk::RngStream rng(7, 8);
  std::vector<double> a(4096), b(4096);
  for (auto& x : a) x = rng.next_u01();
  for (auto& x : b) x = rng.next_u01();
  for (auto _ : state) {
    benchmark::DoNotOptimize(combwalk::ks_two_sample(a, b));
  }
}
BENCHMARK(BM_KsTwoSample);

}  // namespace

BENCHMARK_MAIN();
