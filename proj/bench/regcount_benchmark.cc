// Copyright 2026 The regcount Authors
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

#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "regcount/bench.h"
#include "regcount/catalog.h"
#include "regcount/fuzz.h"
#include "regcount/generator.h"
#include "regcount/propagators.h"
#include "regcount/sweep.h"

namespace regcount {
namespace {

FuzzOptions DeskFuzz() {
  FuzzOptions o;
  o.config.max_length = 6;
  o.seed = 42;
  o.count = 2000;
  o.modes = {Mode::kAtMost, Mode::kAtLeast, Mode::kExact};
  return o;
}

void BM_FuzzSerial(benchmark::State& state) {
  const FuzzOptions o = DeskFuzz();
  for (auto _ : state) benchmark::DoNotOptimize(RunFuzzSerial(o));
  state.SetItemsProcessed(state.iterations() * o.count);
}
BENCHMARK(BM_FuzzSerial)->Unit(benchmark::kMillisecond);

void BM_FuzzParallel(benchmark::State& state) {
  FuzzOptions o = DeskFuzz();
  o.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(RunFuzz(o));
  state.SetItemsProcessed(state.iterations() * o.count);
}
BENCHMARK(BM_FuzzParallel)
    ->Arg(2)
    ->Arg(4)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_Family(benchmark::State& state, const std::string& family, Mode mode) {
  const std::vector<std::string> families = {family};
  GenConfig cfg;
  const std::vector<CorpusEntry> corpus =
      GenerateFamilyCorpus(families, 500, 7, cfg);
  for (auto _ : state) {
    for (const CorpusEntry& e : corpus) {
      DomainStore store = e.instance.store;
      benchmark::DoNotOptimize(Propagate(mode, e.instance.dfa, store));
    }
  }
  state.SetItemsProcessed(state.iterations() * corpus.size());
}
BENCHMARK_CAPTURE(BM_Family, aab_exact, "AAB", Mode::kExact);
BENCHMARK_CAPTURE(BM_Family, aab_decomposed, "AAB", Mode::kDecomposedExact);
BENCHMARK_CAPTURE(BM_Family, rst_exact, "RST", Mode::kExact);
BENCHMARK_CAPTURE(BM_Family, rst_decomposed, "RST", Mode::kDecomposedExact);
BENCHMARK_CAPTURE(BM_Family, among_exact, "AMONG", Mode::kExact);
BENCHMARK_CAPTURE(BM_Family, among_decomposed, "AMONG",
                  Mode::kDecomposedExact);

void BM_AtMostScaling(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CounterDfa dfa = Catalog("RST");
  const DomainStore base(
      std::vector<SymbolDomain>(n, SymbolDomain::Full(dfa.alphabet_size())),
      CounterDomain::Interval(n / 4, n / 4 + 2));
  for (auto _ : state) {
    DomainStore store = base;
    benchmark::DoNotOptimize(PropagateAtMost(dfa, store));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_AtMostScaling)
    ->RangeMultiplier(2)
    ->Range(256, 16384)
    ->Complexity(benchmark::oN);

void BM_Sweeps(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CounterDfa dfa = Catalog("RST");
  const DomainStore store(
      std::vector<SymbolDomain>(n, SymbolDomain::Full(dfa.alphabet_size())),
      CounterDomain{0});
  for (auto _ : state) benchmark::DoNotOptimize(ComputeSweeps(dfa, store));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Sweeps)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

}  // namespace
}  // namespace regcount

BENCHMARK_MAIN();
