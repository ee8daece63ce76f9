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

#ifndef REGCOUNT_BENCH_H_
#define REGCOUNT_BENCH_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "regcount/generator.h"
#include "regcount/instance.h"
#include "regcount/propagators.h"

namespace regcount {

struct CorpusEntry {
  std::string family;
  Instance instance;
};

// Root-propagation comparison of two propagators per constraint family:
// cumulative seconds, failures, and (where both succeed) prunings.
struct BenchRow {
  std::string family;
  std::uint64_t instances = 0;
  double seconds[2] = {0.0, 0.0};
  std::uint64_t failures[2] = {0, 0};
  std::uint64_t prunings[2] = {0, 0};
};

struct BenchReport {
  Mode modes[2] = {Mode::kExact, Mode::kDecomposedExact};
  std::vector<BenchRow> rows;  // families in order of first appearance
};

struct BenchOptions {
  Mode first = Mode::kExact;
  Mode second = Mode::kDecomposedExact;
  int threads = 1;
};

BenchReport Bench(std::span<const CorpusEntry> corpus,
                  const BenchOptions& options = {});

// `per_family` random instances over each named catalog automaton (AMONG
// instances carry a native-value signature).
std::vector<CorpusEntry> GenerateFamilyCorpus(
    std::span<const std::string> families, std::uint64_t per_family,
    std::uint64_t seed, const GenConfig& config = {});

std::string FormatTable(const BenchReport& report, bool with_seconds = true);
std::string FormatTsv(const BenchReport& report, bool with_seconds = true);

}  // namespace regcount

#endif  // REGCOUNT_BENCH_H_
