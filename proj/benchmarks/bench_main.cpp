#include <benchmark/benchmark.h>

#include "g2l/g2model/iwasawa.hpp"
#include "g2l/g2model/lie.hpp"
#include "g2l/lfunc/identities.hpp"
#include "g2l/orbits/orbits.hpp"
#include "g2l/reps/characters.hpp"

using namespace g2l;

static void BM_SchurChar(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(schur_char(m, m));
}
BENCHMARK(BM_SchurChar)->Arg(2)->Arg(4)->Arg(8);

static void BM_SymPowerAdjoint(benchmark::State& state) {
  const auto adj = schur_char(1, 1);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sym_power_char(adj, k));
}
BENCHMARK(BM_SymPowerAdjoint)->Arg(4)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_PoincareSeries(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(poincare_series(k));
}
BENCHMARK(BM_PoincareSeries)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_LieModels(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_lie_models());
}
BENCHMARK(BM_LieModels)->Unit(benchmark::kMillisecond);

static void BM_Iwasawa(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_iwasawa());
}
BENCHMARK(BM_Iwasawa)->Unit(benchmark::kMillisecond);

static void BM_Proposition(benchmark::State& state) {
  const auto which = state.range(0) == 0 ? PlaceCase::split : PlaceCase::nonsplit;
  const int degree = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(proposition_check(which, degree));
}
BENCHMARK(BM_Proposition)->Args({0, 8})->Args({0, 12})->Args({1, 12})->Unit(benchmark::kMillisecond);

static void BM_OrbitBfs(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto gens = group_generators(q, GeneratorSet::full);
  const PackedVector start = pack({0, 0, 1, 0, 0, 2, 0, 0});
  for (auto _ : state) {
    const auto orb = orbit(start, gens);
    state.counters["orbit_size"] = static_cast<double>(orb.size());
  }
}
BENCHMARK(BM_OrbitBfs)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
