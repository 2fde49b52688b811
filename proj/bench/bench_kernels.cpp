// Serial reference paths against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "jetvir/jetsums.hpp"
#include "jetvir/verify.hpp"

using namespace jetvir;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(2) ? Execution::parallel : Execution::serial;
}

void BM_SumBrute(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  const jetsums::SumKind s{jetsums::Kind::E, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(jetsums::sum_brute(s, d, p, exec_of(state)));
  state.SetLabel(state.range(2) ? "parallel" : "serial");
}
BENCHMARK(BM_SumBrute)->ArgsProduct({{4, 6}, {8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_IdentitySweep(benchmark::State& state) {
  jetsums::SweepOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        jetsums::verify_identities(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), opts));
  state.SetLabel(state.range(2) ? "parallel" : "serial");
}
BENCHMARK(BM_IdentitySweep)->ArgsProduct({{4}, {8}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_VerifySweep(benchmark::State& state) {
  verify::Config cfg;
  cfg.d_max = static_cast<int>(state.range(0));
  cfg.p_max = static_cast<int>(state.range(1));
  cfg.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify::run(cfg));
  state.SetLabel(state.range(2) ? "parallel" : "serial");
}
BENCHMARK(BM_VerifySweep)->ArgsProduct({{3}, {4}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
