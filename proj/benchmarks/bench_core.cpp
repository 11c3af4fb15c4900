// Copyright 2026 The lambdalab Authors.
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

#include "lambdalab/corpus.hpp"
#include "lambdalab/montecarlo.hpp"
#include "lambdalab/pars.hpp"
#include "lambdalab/strategy.hpp"
#include "lambdalab/syntax.hpp"

namespace {

using namespace lambdalab;

Term nested_copier(int depth) {
  Term t = var("y");
  for (int i = 0; i < depth; ++i) t = app(mk_Cn(3), t);
  return t;
}

void BM_Substitute(benchmark::State& state) {
  const Term body = nested_copier(static_cast<int>(state.range(0)));
  const Term arg = parse("\\a.\\b.a (b y) y");
  for (auto _ : state) benchmark::DoNotOptimize(substitute(body, "y", arg));
}
BENCHMARK(BM_Substitute)->Arg(8)->Arg(64);

void BM_Redexes(benchmark::State& state) {
  const Term t = nested_copier(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(redexes(t));
}
BENCHMARK(BM_Redexes)->Arg(8)->Arg(64);

void BM_Canonicalize(benchmark::State& state) {
  const Term t = mk_Mn(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(t));
}
BENCHMARK(BM_Canonicalize)->Arg(5)->Arg(20);

void BM_AnalyzeMn(benchmark::State& state) {
  const Term t = mk_Mn(static_cast<std::size_t>(state.range(0)));
  const Strategy s = Strategy::p_eps(Probability(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(t, s));
}
BENCHMARK(BM_AnalyzeMn)->Arg(3)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_EvolveTrace(benchmark::State& state) {
  const Strategy s = Strategy::p_eps(Probability(1, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve_trace(mk_example1(), s, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_EvolveTrace)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const Strategy s = Strategy::p_eps(Probability(1, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate(mk_example2(), s, 0, 1000, 1000));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
