#include <benchmark/benchmark.h>

#include "cox/davis.hpp"

namespace {

void BM_EnumerateD4(benchmark::State& state) {
  auto m = cox::make_matrix(
      {{1, 3, 3, 3}, {3, 1, 2, 2}, {3, 2, 1, 2}, {3, 2, 2, 1}});
  for (auto _ : state) {
    auto table = cox::enumerate(m);
    benchmark::DoNotOptimize(table.size());
  }
}
BENCHMARK(BM_EnumerateD4);

void BM_EnumerateA4(benchmark::State& state) {
  auto m = cox::make_matrix(
      {{1, 3, 2, 2}, {3, 1, 3, 2}, {2, 3, 1, 3}, {2, 2, 3, 1}});
  for (auto _ : state) {
    auto table = cox::enumerate(m);
    benchmark::DoNotOptimize(table.size());
  }
}
BENCHMARK(BM_EnumerateA4);

void BM_BuildComplexI26(benchmark::State& state) {
  auto m = cox::make_dihedral(6);
  for (auto _ : state) {
    auto cx = cox::build_complex(m, 6);
    benchmark::DoNotOptimize(cx.cells().size());
  }
}
BENCHMARK(BM_BuildComplexI26);

void BM_BuildComplexTriangle322(benchmark::State& state) {
  auto m = cox::make_matrix({{1, 3, 2}, {3, 1, 2}, {2, 2, 1}});
  for (auto _ : state) {
    auto cx = cox::build_complex(m, 8);
    benchmark::DoNotOptimize(cx.cells().size());
  }
}
BENCHMARK(BM_BuildComplexTriangle322);

}  // namespace

BENCHMARK_MAIN();
