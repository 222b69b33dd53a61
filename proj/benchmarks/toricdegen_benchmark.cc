// Copyright 2026 The toricdegen Authors
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

#include "toricdegen/families.h"
#include "toricdegen/groebner.h"
#include "toricdegen/moebius.h"
#include "toricdegen/semigroup.h"
#include "toricdegen/toric.h"

namespace toricdegen {
namespace {

void BM_ToricIdealPairwiseCoprime(benchmark::State& state) {
  const GeneratorMatrix a = PairwiseCoprime({2, 3, 5, 7}).generators;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ToricIdeal(SemigroupPresentation(a)));
  }
}
BENCHMARK(BM_ToricIdealPairwiseCoprime);

void BM_VerifyTheoremMainIntervalEven(benchmark::State& state) {
  const SemigroupPresentation s(IntervalEven(state.range(0)).generators);
  for (auto _ : state) {
    const DegenerationContext ctx(s, {0, 1, 3});
    benchmark::DoNotOptimize(VerifyTheoremMain(ctx, TieBreak::kDegRevLex).equal);
  }
}
BENCHMARK(BM_VerifyTheoremMainIntervalEven)->DenseRange(1, 7, 2);

void BM_BuchbergerScroll(benchmark::State& state) {
  std::vector<IntVector> cols;
  for (long long i = 0; i < state.range(0); ++i) cols.push_back({1, i});
  const SemigroupPresentation s(GeneratorMatrix(2, cols));
  const std::vector<Binomial> gens = ToricIdeal(s);
  const TermOrder order = TermOrder::DegRevLex(cols.size());
  for (auto _ : state) benchmark::DoNotOptimize(Buchberger(gens, order));
}
BENCHMARK(BM_BuchbergerScroll)->DenseRange(4, 8, 2);

void BM_BettiElementsDegenerated(benchmark::State& state) {
  const DegenerationContext ctx(SemigroupPresentation(AOfM(state.range(0)).generators),
                                {1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(BettiElements(ctx.degenerated()));
}
BENCHMARK(BM_BettiElementsDegenerated)->DenseRange(1, 8, 3);

void BM_IsSaturatedAOfM(benchmark::State& state) {
  const DegenerationContext ctx(SemigroupPresentation(AOfM(state.range(0)).generators),
                                {1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(IsSaturated(ctx.degenerated()));
}
BENCHMARK(BM_IsSaturatedAOfM)->DenseRange(2, 8, 3);

void BM_MoebiusTable(benchmark::State& state) {
  const SemigroupPresentation s(PairwiseCoprime({2, 3, 5}).generators);
  for (auto _ : state) benchmark::DoNotOptimize(MoebiusTable(s, state.range(0)));
}
BENCHMARK(BM_MoebiusTable)->RangeMultiplier(2)->Range(64, 512);

void BM_MuClosedVersusBruteForce(benchmark::State& state) {
  const SemigroupPresentation s(PairwiseCoprime({2, 3, 5}).generators);
  const MoebiusContext ctx(s);
  const bool closed = state.range(0) == 1;
  for (auto _ : state) {
    for (long long z = 0; z <= 60; ++z) {
      benchmark::DoNotOptimize(closed ? MuClosed(ctx, {z}) : MuBruteForce(s, {z}));
    }
  }
  state.SetLabel(closed ? "closed" : "brute_force");
}
BENCHMARK(BM_MuClosedVersusBruteForce)->Arg(0)->Arg(1);

}  // namespace
}  // namespace toricdegen

BENCHMARK_MAIN();
