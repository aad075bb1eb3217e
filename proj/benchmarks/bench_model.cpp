#include <benchmark/benchmark.h>

#include "mps/verifier.hpp"

using namespace mps;

namespace {

void BM_Measure(benchmark::State& state) {
  const auto setting = MeasurementSetting::nonlocal(NonlocalId::xx_yy);
  const EpistemicState psi = canonical_state(CanonicalStateName::psi_minus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure(setting, psi));
  }
}
BENCHMARK(BM_Measure);

void BM_RunExact(benchmark::State& state) {
  const std::vector<MeasurementSetting> settings = {
      MeasurementSetting::local_pair(Axis::x, Axis::x),
      MeasurementSetting::nonlocal(NonlocalId::xx_yy),
      MeasurementSetting::nonlocal(NonlocalId::zz_yy)};
  const EpistemicState start = canonical_state(CanonicalStateName::psi_minus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_exact(start, settings));
  }
}
BENCHMARK(BM_RunExact);

void BM_SquareSweep(benchmark::State& state) {
  for (auto _ : state) {
    for (int i = 0; i < kJointSpaceSize; ++i)
      benchmark::DoNotOptimize(square_products(JointOnticState::decode(i), 0));
  }
}
BENCHMARK(BM_SquareSweep);

void BM_Repeatability(benchmark::State& state) {
  const auto& family = context_info(ContextId::C3).family;
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_repeatability(family, "table1", 4, workers));
  }
}
BENCHMARK(BM_Repeatability)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
