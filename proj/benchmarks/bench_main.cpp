#include <benchmark/benchmark.h>

#include <random>

#include "dofb/bottleneck.hpp"
#include "dofb/families.hpp"
#include "dofb/generic_rank.hpp"
#include "dofb/region.hpp"
#include "dofb/schemes.hpp"

using namespace dofb;

static void BM_StructuralRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (auto& row : table) {
    for (int& cell : row) cell = rng() % 3 == 0;
  }
  const SupportPattern pattern = SupportPattern::from_table(table);
  for (auto _ : state) benchmark::DoNotOptimize(structural_rank(pattern));
}
BENCHMARK(BM_StructuralRank)->Arg(8)->Arg(32)->Arg(128);

static void BM_FindBottlenecksTwoBounds(benchmark::State& state) {
  const LayeredNetwork net = two_bounds(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_all_bottlenecks(net));
}
BENCHMARK(BM_FindBottlenecksTwoBounds)->DenseRange(2, 8, 3);

static void BM_RegionTwoBounds(benchmark::State& state) {
  const auto certs = find_all_bottlenecks(two_bounds(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(sum_dof(build_region(certs)));
}
BENCHMARK(BM_RegionTwoBounds)->Arg(4);

static void BM_SimulateMD1D2(benchmark::State& state) {
  const SchemeBundle b = scheme_m_d1d2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(simulate(b.network, b.program, b.space, 10, 0));
}
BENCHMARK(BM_SimulateMD1D2)->Arg(2)->Arg(5)->Arg(8);
BENCHMARK_MAIN();
