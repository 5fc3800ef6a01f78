#include <cmred/cm_engine.hpp>
#include <cmred/conjugacy.hpp>
#include <cmred/zoo.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace cmred;

const char* const kSpecs[] = {"sym:5", "psl2:11", "sp4f2:+", "psu3:3"};

UnitaryGaloisModel model(const char* spec) {
  ZooGroup z = build_zoo_group(parse_zoo_spec(spec));
  return build_model(std::move(z.group), z.subgroup_gens);
}

void BM_ZooBuild(benchmark::State& state) {
  const ZooSpec spec = parse_zoo_spec(kSpecs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(build_zoo_group(spec).group.order());
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_ZooBuild)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ConjugacyClasses(benchmark::State& state) {
  const ZooGroup z = build_zoo_group(parse_zoo_spec(kSpecs[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes(z.group).count());
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_ConjugacyClasses)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Convolution(benchmark::State& state) {
  const auto m = model(kSpecs[state.range(0)]);
  const AlgebraElement p = phi_c(CMType{0b101}, m);
  const AlgebraElement r = reflex(p, m.group());
  for (auto _ : state) benchmark::DoNotOptimize(convolve(p, r, m.group()).support_size());
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_Convolution)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
  const auto m = model(kSpecs[state.range(0)]);
  const ClosedForm closed(m);
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    const CMType phi{rng() & full_subset(m.n())};
    benchmark::DoNotOptimize(closed.a_phi0(phi).class_count());
  }
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_ClosedForm)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();
