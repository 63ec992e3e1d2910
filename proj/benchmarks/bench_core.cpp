#include "spectile/lca.hpp"
#include "spectile/lowdim.hpp"
#include "spectile/oracle.hpp"
#include "spectile/periodic.hpp"
#include "spectile/suite.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace spectile;

PeriodicSet brick() {
  return PeriodicSet::create(RatMat::diagonal({Rational(2), Rational(1)}),
                             {RatVec({Rational(0), Rational(0)}), RatVec({Rational(1), Rational(1, 2)})});
}

PeriodicSet binary_cube_set(int d) {
  std::vector<Rational> diag(static_cast<std::size_t>(d), Rational(2));
  std::vector<RatVec> offsets;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<Rational> e(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) e[static_cast<std::size_t>(j)] = (mask >> j) & 1u ? 1 : 0;
    offsets.push_back(RatVec(std::move(e)));
  }
  return PeriodicSet::create(RatMat::diagonal(std::move(diag)), std::move(offsets));
}

void BM_ClassifyBrick(benchmark::State& state) {
  PeriodicSet ps = brick();
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_pair(ps));
  }
}
BENCHMARK(BM_ClassifyBrick);

void BM_ClassifyBinaryCube(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  PeriodicSet ps = binary_cube_set(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_pair(ps));
  }
}
BENCHMARK(BM_ClassifyBinaryCube)->Arg(6)->Arg(8)->Arg(10);

void BM_RandomClassify3d(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    std::mt19937_64 rng(seed++);
    PeriodicSet ps = random_periodic_set(rng);
    benchmark::DoNotOptimize(classify_pair(ps));
  }
}
BENCHMARK(BM_RandomClassify3d);

void BM_TilingOracleBrick(benchmark::State& state) {
  PeriodicSet ps = brick();
  for (auto _ : state) {
    benchmark::DoNotOptimize(rasterized_tiling_check(ps));
  }
}
BENCHMARK(BM_TilingOracleBrick);

void BM_SpectralPairCheck(benchmark::State& state) {
  std::mt19937_64 rng(1);
  MeasurePair pair = random_spectral_measure_pair(rng, static_cast<std::int64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_spectral_pair_measures(pair.mu, pair.nu));
  }
}
BENCHMARK(BM_SpectralPairCheck)->Arg(16)->Arg(32)->Arg(64);

void BM_WindowEnumeration(benchmark::State& state) {
  PeriodicSet ps = brick();
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_window(ps, 6));
  }
}
BENCHMARK(BM_WindowEnumeration);

}  // namespace

BENCHMARK_MAIN();
