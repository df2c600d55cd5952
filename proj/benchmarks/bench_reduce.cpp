#include <benchmark/benchmark.h>

#include <random>

#include "cox/element.hpp"

namespace {

constexpr auto INF = cox::CoxeterMatrix::kInfinity;

cox::Word random_word(int rank, int len, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> gen(0, rank - 1);
  cox::Word w;
  for (int i = 0; i < len; ++i) w.push_back(static_cast<char>(gen(rng)));
  return w;
}

void BM_ReduceDihedral6(benchmark::State& state) {
  auto m = cox::make_dihedral(6);
  const auto w = random_word(2, static_cast<int>(state.range(0)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(cox::canonical_word(*m, w));
}
BENCHMARK(BM_ReduceDihedral6)->Arg(8)->Arg(16)->Arg(32);

void BM_ReduceD4(benchmark::State& state) {
  auto m = cox::make_matrix(
      {{1, 3, 3, 3}, {3, 1, 2, 2}, {3, 2, 1, 2}, {3, 2, 2, 1}});
  const auto w = random_word(4, static_cast<int>(state.range(0)), 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(cox::canonical_word(*m, w));
}
BENCHMARK(BM_ReduceD4)->Arg(8)->Arg(12)->Arg(16);

void BM_ReduceTwistSystem(benchmark::State& state) {
  auto m = cox::make_matrix({{1, 2, INF}, {2, 1, INF}, {INF, INF, 1}});
  const auto w = random_word(3, static_cast<int>(state.range(0)), 13);
  for (auto _ : state)
    benchmark::DoNotOptimize(cox::canonical_word(*m, w));
}
BENCHMARK(BM_ReduceTwistSystem)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
