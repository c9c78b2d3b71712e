#include <benchmark/benchmark.h>

#include "bmg/enumeration.hpp"
#include "bmg/truncation.hpp"

namespace {

void BM_ReferenceScan(benchmark::State& state) {
  auto frame = bmg::complete_bipartite_frame(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(bmg::scan_reference(frame, true));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << frame.free_bits.size()));
}

void BM_ParallelScan(benchmark::State& state) {
  auto frame = bmg::complete_bipartite_frame(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(bmg::scan_parallel(frame, true, static_cast<int>(state.range(2))));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << frame.free_bits.size()));
}

void BM_ParallelExtension(benchmark::State& state) {
  std::vector<bmg::ElementaryBlock> blocks{{2, bmg::Color::kSecond}, {2, bmg::Color::kSecond}, {3, bmg::Color::kSecond}};
  auto frame = bmg::extension_frame(bmg::elementary_graph(blocks));
  for (auto _ : state) benchmark::DoNotOptimize(bmg::scan_parallel(frame, true, 0));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << frame.free_bits.size()));
}

}  // namespace

BENCHMARK(BM_ReferenceScan)->Args({2, 2})->Args({2, 3})->Args({3, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelScan)->Args({2, 3, 1})->Args({3, 3, 1})->Args({3, 3, 0})->Args({3, 4, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelExtension)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
