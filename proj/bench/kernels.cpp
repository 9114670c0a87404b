// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "bellrec/bell.hpp"
#include "bellrec/candidates.hpp"
#include "bellrec/reconstruct_lower.hpp"

using namespace bellrec;

namespace {

const UnlabeledGraph& full_bell_empty(int n) {
  static std::vector<UnlabeledGraph> cache(10);
  if (cache[n].order() == 0) cache[n] = build_bell(Graph::empty(n), BellVariant::full()).graph;
  return cache[n];
}

const UnlabeledGraph& lower_bell_empty(int n) {
  static std::vector<UnlabeledGraph> cache(12);
  if (cache[n].order() == 0) cache[n] = build_bell(Graph::empty(n), BellVariant::at_most(3)).graph;
  return cache[n];
}

template <auto Kernel>
void diagnostics(benchmark::State& state) {
  const auto& b = full_bell_empty(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(b, Property1Reading::existence));
  state.counters["vertices"] = b.order();
}

template <auto Kernel>
void lower_kernel(benchmark::State& state) {
  const auto& b = lower_bell_empty(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(b));
  state.counters["vertices"] = b.order();
}

}  // namespace

BENCHMARK(diagnostics<all_diagnostics>)->Name("all_diagnostics/parallel")->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(diagnostics<all_diagnostics_serial>)->Name("all_diagnostics/serial")->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK(lower_kernel<component_counts>)->Name("component_counts/parallel")->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(lower_kernel<component_counts_serial>)->Name("component_counts/serial")->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK(lower_kernel<detect_k_regime>)->Name("detect_k_regime/parallel")->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(lower_kernel<detect_k_regime_serial>)->Name("detect_k_regime/serial")->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK(lower_kernel<reconstruct_from_bk_report>)->Name("reconstruct_from_bk/parallel")->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(lower_kernel<reconstruct_from_bk_report_serial>)->Name("reconstruct_from_bk/serial")->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
