#include <benchmark/benchmark.h>

#include "permpat/asymptotics.hpp"
#include "permpat/exact_count.hpp"
#include "permpat/stochastic.hpp"

using namespace permpat;

namespace {

Permutation random_permutation(int n, std::uint64_t seed) {
  RandomSource src(seed);
  return sample_uniform(n, src);
}

void BM_contains_classic_1324(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Permutation p = random_permutation(n, 7);
  Permutation q = Permutation::parse("1324");
  for (auto _ : state)
    benchmark::DoNotOptimize(contains(p, q, ContainmentKind::Classic));
}
BENCHMARK(BM_contains_classic_1324)->Arg(8)->Arg(16)->Arg(32);

void BM_count_alpha3_copies(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Permutation p = random_permutation(n, 11);
  Permutation q = monotone_pattern(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        count_occurrences(p, q, ContainmentKind::Classic));
}
BENCHMARK(BM_count_alpha3_copies)->Arg(25)->Arg(100)->Arg(400);

void BM_brute_force_avoiders(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Permutation q = Permutation::parse("1324");
  for (auto _ : state)
    benchmark::DoNotOptimize(
        brute_force_count(n, q, ContainmentKind::Classic));
}
BENCHMARK(BM_brute_force_avoiders)->Arg(6)->Arg(7)->Arg(8)
    ->Unit(benchmark::kMillisecond);

void BM_sample_uniform(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  RandomSource src(42);
  for (auto _ : state) benchmark::DoNotOptimize(sample_uniform(n, src));
}
BENCHMARK(BM_sample_uniform)->Arg(100)->Arg(1000);

void BM_series_reciprocal(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  FormalPowerSeries h = gf_1342(order);  // any dense rational series
  std::vector<Rational> coeffs = h.coefficients();
  coeffs[0] = 1;
  FormalPowerSeries dense(coeffs);
  for (auto _ : state) benchmark::DoNotOptimize(ps_reciprocal(dense));
}
BENCHMARK(BM_series_reciprocal)->Arg(16)->Arg(64);

void BM_gessel_formula(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(s_1234(n, GesselForm::Product));
}
BENCHMARK(BM_gessel_formula)->Arg(25)->Arg(50)->Arg(100);

void BM_jackson_series(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(very_tight_monotone_counts(4, 40));
}
BENCHMARK(BM_jackson_series)->Unit(benchmark::kMillisecond);

void BM_rho_root(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        tight_constant_roots(TightConstant::Rho1342, 1e-8));
}
BENCHMARK(BM_rho_root)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
