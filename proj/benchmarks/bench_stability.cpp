#include <benchmark/benchmark.h>

#include "repstab/presets.hpp"
#include "repstab/stability.hpp"
#include "repstab/structure.hpp"

using namespace repstab;

namespace {

StabilityData datum_for(const Representation& v, std::vector<Rational> beta) {
  GClass alpha = g_class(v);
  return StabilityData::make(v.algebra(), KClass(std::move(beta)),
                             canonical_gamma(v.algebra(), alpha, v.field()),
                             alpha);
}

void BM_destabilizer_search(benchmark::State& state) {
  FieldSpec field = FieldSpec::prime(static_cast<std::uint32_t>(state.range(0)));
  Representation p2 = preset_object("sl2block", "P2", field);
  StabilityData sd = datum_for(p2, {make_rational(1), make_rational(0)});
  for (auto _ : state) benchmark::DoNotOptimize(destabilizer_search(sd, p2));
}
BENCHMARK(BM_destabilizer_search)->Arg(2)->Arg(3)->Arg(5);

void BM_hn_filtration(benchmark::State& state) {
  FieldSpec field = FieldSpec::prime(static_cast<std::uint32_t>(state.range(0)));
  Representation p = preset_object("sl2block", "P2", field);
  Representation v = direct_sum(p, preset_object("sl2block", "M0", field));
  StabilityData sd = datum_for(v, {make_rational(0), make_rational(1)});
  for (auto _ : state) benchmark::DoNotOptimize(hn_filtration(sd, v));
}
BENCHMARK(BM_hn_filtration)->Arg(2)->Arg(3);

void BM_filtration_enumerate_max(benchmark::State& state) {
  Representation p2 = preset_object("sl2block", "P2", FieldSpec::prime(2));
  StabilityData sd = datum_for(p2, {make_rational(1), make_rational(-1)});
  long long bound = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(filtration_enumerate_max(sd, p2, bound));
}
BENCHMARK(BM_filtration_enumerate_max)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
