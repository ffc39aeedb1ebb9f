// Serial reference against the OpenMP kernels for the two stable-ball routes.

#include <benchmark/benchmark.h>

#include "graphiso/generators.hpp"
#include "graphiso/parallel.hpp"
#include "graphiso/stable_norm.hpp"

using namespace graphiso;

namespace {

void exact_volume_k(benchmark::State& state, Exec exec) {
  const auto g = gen::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stable_ball_volume_exact(g, exec).value);
}

void mc_volume(benchmark::State& state, Exec exec) {
  const auto g = gen::random_weighted({6, 6, 0.1, 10.0, 4}, 7);
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stable_ball_volume_mc(g, samples, 1, exec).value);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(exact_volume_k, serial, Exec::serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(exact_volume_k, parallel, Exec::parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(mc_volume, serial, Exec::serial)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(mc_volume, parallel, Exec::parallel)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
