#include <benchmark/benchmark.h>

#include "lejalab/conformal.hpp"
#include "lejalab/lebesgue.hpp"
#include "lejalab/nodes.hpp"
#include "lejalab/separation.hpp"

using namespace lejalab;

namespace {

const Scheme& leja_rows() {
  static const Scheme scheme = Scheme::generate(SchemeKind::leja, SetSpec::segment(), {256});
  return scheme;
}

void BM_LejaSequence(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto mesh = build_mesh(SetSpec::segment(), default_leja_candidates(n),
                               Clustering::endpoint_clustered);
  for (auto _ : state) benchmark::DoNotOptimize(leja_sequence(mesh, n));
  state.counters["candidates"] = static_cast<double>(mesh.size());
}
BENCHMARK(BM_LejaSequence)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

void BM_LebesgueConstant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto row = leja_rows().row(n);
  for (auto _ : state) benchmark::DoNotOptimize(lebesgue_constant(row, SetSpec::segment()));
}
BENCHMARK(BM_LebesgueConstant)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMillisecond);

void BM_SeparationExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto row = leja_rows().row(n);
  const auto green = GreenModel::exact(SetSpec::segment());
  for (auto _ : state) benchmark::DoNotOptimize(separation_ratios(row, green, n));
}
BENCHMARK(BM_SeparationExact)->RangeMultiplier(4)->Range(16, 256);

void BM_DiscreteGreen(benchmark::State& state) {
  const auto charges = static_cast<std::size_t>(state.range(0));
  const auto arc = SetSpec::circular_arc(1.0, 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(GreenModel::discrete_leja(arc, charges));
}
BENCHMARK(BM_DiscreteGreen)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
