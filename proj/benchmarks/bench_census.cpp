#include <benchmark/benchmark.h>

#include "repstab/census.hpp"
#include "repstab/presets.hpp"

using namespace repstab;

namespace {

void BM_enumerate_kronecker(benchmark::State& state) {
  AlgebraPtr algebra = preset_algebra("kronecker");
  GClass alpha({1, static_cast<long long>(state.range(0))});
  FieldSpec field = FieldSpec::prime(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_reps(algebra, alpha, field));
}
BENCHMARK(BM_enumerate_kronecker)->Arg(1)->Arg(2)->Arg(3);

void BM_enumerate_dualnumbers(benchmark::State& state) {
  AlgebraPtr algebra = preset_algebra("dualnumbers");
  GClass alpha({static_cast<long long>(state.range(0))});
  FieldSpec field = FieldSpec::prime(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_reps(algebra, alpha, field));
}
BENCHMARK(BM_enumerate_dualnumbers)->Arg(2)->Arg(3)->Arg(4);

void BM_theta_strata(benchmark::State& state) {
  AlgebraPtr algebra = preset_algebra("sl2block");
  GClass alpha({1, 2});
  FieldSpec field = FieldSpec::prime(2);
  IsoClassCatalog catalog = enumerate_reps(algebra, alpha, field);
  StabilityData sd = StabilityData::make(
      algebra, KClass({make_rational(1), make_rational(0)}),
      canonical_gamma(algebra, alpha, field), alpha);
  for (auto _ : state) benchmark::DoNotOptimize(theta_strata(catalog, sd));
}
BENCHMARK(BM_theta_strata);

void BM_cover_check(benchmark::State& state) {
  AlgebraPtr algebra = preset_algebra("dualnumbers");
  IsoClassCatalog catalog =
      enumerate_reps(algebra, GClass({3}), FieldSpec::prime(2));
  for (auto _ : state) benchmark::DoNotOptimize(cover_check(catalog));
}
BENCHMARK(BM_cover_check);

}  // namespace

BENCHMARK_MAIN();
