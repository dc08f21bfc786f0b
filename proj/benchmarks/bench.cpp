// Copyright 2026 The wtgc Authors.
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

#include "wtgc/homomorphism.hpp"
#include "wtgc/io.hpp"
#include "wtgc/pumping.hpp"
#include "wtgc/semantics.hpp"
#include "wtgc/transforms.hpp"

namespace {

wtgc::Wtgc fixture(const std::string& name) {
  return wtgc::parse_grammar(wtgc::read_file(std::string(WTGC_FIXTURE_DIR) + "/" + name));
}

// Fresh evaluator per iteration so memoization does not carry over.
void BM_EvaluateSeparation(benchmark::State& state) {
  const auto g = fixture("fx5.wtg");
  const auto t = wtgc::separation_family(static_cast<std::size_t>(state.range(0))).second;
  for (auto _ : state) {
    wtgc::Evaluator e(g);
    benchmark::DoNotOptimize(e.evaluate(t));
  }
  state.SetLabel(std::to_string(t.size()) + " nodes");
}
BENCHMARK(BM_EvaluateSeparation)->DenseRange(4, 12, 4);

void BM_EnumerateAndEvaluate(benchmark::State& state) {
  const auto g = fixture("fx1.wtg");
  const auto trees = wtgc::enumerate_trees(g.alphabet(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    wtgc::Evaluator e(g);
    for (const auto& t : trees) benchmark::DoNotOptimize(e.evaluate(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(trees.size()));
}
BENCHMARK(BM_EnumerateAndEvaluate)->Arg(7)->Arg(9);

void BM_DisambiguateFx2(benchmark::State& state) {
  const auto u = wtgc::disjoint_union(fixture("fx2_g.wtg"), fixture("fx2_gp.wtg"));
  const auto h = wtgc::support_hom(u.semiring());
  wtgc::DisambiguateOptions options;
  options.unit_weights = true;
  for (auto _ : state) benchmark::DoNotOptimize(wtgc::disambiguate(u, h, options));
}
BENCHMARK(BM_DisambiguateFx2);

void BM_ImageGrammarFx3(benchmark::State& state) {
  const auto g = fixture("fx3.wtg");
  const auto h = wtgc::parse_hom(wtgc::read_file(std::string(WTGC_FIXTURE_DIR) + "/fx3.hom"));
  for (auto _ : state) benchmark::DoNotOptimize(wtgc::image_grammar(g, h));
}
BENCHMARK(BM_ImageGrammarFx3);

}  // namespace

BENCHMARK_MAIN();
