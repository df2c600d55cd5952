#include <benchmark/benchmark.h>

#include "cox/rigidity.hpp"

namespace {

constexpr auto INF = cox::CoxeterMatrix::kInfinity;

cox::GeneratorMap twist_map() {
  auto source = cox::make_matrix({{1, 2, INF}, {2, 1, INF}, {INF, INF, 1}},
                                 {"s", "t", "u"});
  auto target = cox::make_matrix({{1, 2, INF}, {2, 1, INF}, {INF, INF, 1}},
                                 {"st", "t", "u"});
  return cox::GeneratorMap{source, target,
                           {cox::word({0, 1}), cox::word({1}), cox::word({2})}};
}

void BM_NormalFormBall(benchmark::State& state) {
  auto m = cox::make_matrix({{1, 2, INF}, {2, 1, INF}, {INF, INF, 1}});
  auto ball = cox::enumerate(m, static_cast<int>(state.range(0)), 20000);
  for (auto _ : state) {
    int involutions = 0;
    for (int i = 1; i < ball.size(); ++i) {
      auto a = ball.element(i);
      if (!cox::multiply(a, a).is_identity()) continue;
      benchmark::DoNotOptimize(cox::involution_normal_form(a));
      ++involutions;
    }
    benchmark::DoNotOptimize(involutions);
  }
}
BENCHMARK(BM_NormalFormBall)->Arg(4)->Arg(6);

void BM_AlignTwistMap(benchmark::State& state) {
  const auto phi = twist_map();
  for (auto _ : state)
    benchmark::DoNotOptimize(cox::align_generating_sets(phi));
}
BENCHMARK(BM_AlignTwistMap);

}  // namespace

BENCHMARK_MAIN();
