// Copyright 2026 The Mischief Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "mischief/conllu.h"
#include "mischief/number_grammar.h"
#include "mischief/rules.h"
#include "mischief/stats.h"

namespace {

const std::string& corpus() {
  static const std::string text = [] {
    std::ifstream in(MISCHIEF_CORPUS, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }();
  return text;
}

void BM_Parse(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mischief::parse_conllu(corpus()));
  state.SetBytesProcessed(state.iterations() *
                          static_cast<int64_t>(corpus().size()));
}
BENCHMARK(BM_Parse);

void BM_Serialize(benchmark::State& state) {
  mischief::Document doc = mischief::parse_conllu(corpus());
  for (auto _ : state) benchmark::DoNotOptimize(mischief::serialize_conllu(doc));
}
BENCHMARK(BM_Serialize);

void BM_Lint(benchmark::State& state) {
  mischief::Document doc = mischief::parse_conllu(corpus());
  mischief::RuleConfig cfg;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        mischief::run_rules(doc, cfg, mischief::RunMode::kLint));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(doc.sentences.size()));
}
BENCHMARK(BM_Lint);

void BM_Rewrite(benchmark::State& state) {
  mischief::Document doc = mischief::parse_conllu(corpus());
  mischief::RuleConfig cfg;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        mischief::run_rules(doc, cfg, mischief::RunMode::kRewrite));
}
BENCHMARK(BM_Rewrite);

void BM_Stats(benchmark::State& state) {
  mischief::Document doc = mischief::parse_conllu(corpus());
  mischief::RuleConfig cfg;
  for (auto _ : state)
    benchmark::DoNotOptimize(mischief::compute_stats(doc, cfg));
}
BENCHMARK(BM_Stats);

void BM_NumberRoundTrip(benchmark::State& state) {
  mischief::Decimal value = mischief::Decimal::parse("835101.596");
  for (auto _ : state) {
    auto words = mischief::verbalize(value);
    benchmark::DoNotOptimize(mischief::evaluate(mischief::parse_number(words)));
  }
}
BENCHMARK(BM_NumberRoundTrip);

}  // namespace

BENCHMARK_MAIN();
