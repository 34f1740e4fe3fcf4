// Serial reference against OpenMP version for each kernel.

#include <benchmark/benchmark.h>

#include <string>

#include "impartial/congruence.hpp"
#include "impartial/kernels.hpp"

using namespace impartial;

namespace {

// Eight terminals and three middle positions with different option sets over
// them. The maximum congruence lumps all terminals together and all middles
// together, so there are Bell(8) * Bell(3) candidates and most fail.
Rulegraph scan_graph() {
  std::vector<std::string> labels;
  std::vector<LabelArrow> arrows;
  for (int i = 0; i < 8; ++i) labels.push_back("t" + std::to_string(i));
  for (int m = 0; m < 3; ++m) {
    labels.push_back("m" + std::to_string(m));
    for (int i = m; i < 8; i += m + 1) arrows.emplace_back(labels.back(), "t" + std::to_string(i));
  }
  return Rulegraph::from_labels(labels, arrows);
}

const Rulegraph& graph() {
  static const Rulegraph g = scan_graph();
  return g;
}

const std::vector<Partition>& candidates() {
  static const auto c = kernels::refinements(max_congruence(graph()));
  return c;
}

void BM_scan_serial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::scan_congruences_serial(graph(), candidates()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(candidates().size()));
}

void BM_scan_parallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::scan_congruences_parallel(graph(), candidates()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(candidates().size()));
}

void BM_extensional_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_extensional_serial(n));
}

void BM_extensional_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_extensional_parallel(n));
}

}  // namespace

BENCHMARK(BM_scan_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_extensional_serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_extensional_parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
