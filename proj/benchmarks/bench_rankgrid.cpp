// Copyright 2026 The rankgrid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "rankgrid/construct.hpp"
#include "rankgrid/formulas.hpp"
#include "rankgrid/solve.hpp"
#include "rankgrid/verify.hpp"

namespace {

using namespace rankgrid;

void BM_ExactGrid4(benchmark::State& state) {
  const Graph g = build(GraphShape::grid(4, static_cast<int>(state.range(0))));
  for (auto _ : state) {
    SolveOptions o;
    o.deterministic = true;
    RankResult r = rank_exact(g, o);
    benchmark::DoNotOptimize(r.upper);
    state.counters["memo"] = static_cast<double>(r.memo_entries);
  }
}
BENCHMARK(BM_ExactGrid4)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_ExactSquare(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Graph g = build(GraphShape::grid(side, side));
  for (auto _ : state) {
    RankResult r = rank_exact(g);
    benchmark::DoNotOptimize(r.upper);
  }
}
BENCHMARK(BM_ExactSquare)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ExactTriangle(benchmark::State& state) {
  const Graph g = build(GraphShape::triangle(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    RankResult r = rank_exact(g);
    benchmark::DoNotOptimize(r.upper);
  }
}
BENCHMARK(BM_ExactTriangle)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Validate(benchmark::State& state) {
  const Ranking r = grid4_certificate(state.range(0)).ranking;
  for (auto _ : state) benchmark::DoNotOptimize(is_valid(r));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Validate)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_Grid4Certificate(benchmark::State& state) {
  for (auto _ : state) {
    Certificate c = grid4_certificate(state.range(0));
    benchmark::DoNotOptimize(c.ranking.label_count());
  }
}
BENCHMARK(BM_Grid4Certificate)->Arg(30)->Arg(125)->Arg(509)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
  for (auto _ : state) {
    int sum = 0;
    for (std::int64_t n = 1; n <= 65536; ++n) sum += rank_4xn(n);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_ClosedForm)->Unit(benchmark::kMillisecond);

void BM_TriangleDissection(benchmark::State& state) {
  for (auto _ : state) {
    TriangleRanking t = triangle_ranking(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(t.achieved);
  }
}
BENCHMARK(BM_TriangleDissection)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
