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

#ifndef REGCOUNT_FUZZ_H_
#define REGCOUNT_FUZZ_H_

#include <cstdint>
#include <string>
#include <vector>

#include "regcount/generator.h"
#include "regcount/instance.h"
#include "regcount/oracle.h"
#include "regcount/propagators.h"

namespace regcount {

// Differential testing of the propagators against the enumeration oracle
// on a seeded random corpus.
//
// Per instance and mode:
//   atmost, atleast  no unsound removal, no DC gap, second run removes
//                    nothing
//   exact            no unsound removal, and everything the decomposition
//                    removes is removed too
//   decomposed       no unsound removal
struct FuzzOptions {
  GenConfig config;
  std::uint64_t seed = 0;
  std::uint64_t count = 1000;
  std::vector<Mode> modes = {Mode::kAtMost, Mode::kAtLeast, Mode::kExact};
  std::uint64_t cap = kDefaultCap;
  int threads = 1;
};

struct FuzzViolation {
  std::uint64_t index = 0;
  Mode mode = Mode::kExact;
  std::string kind;  // "unsound", "dc-gap", "not-idempotent", "not-stronger"
  std::string detail;
};

struct ModeTally {
  std::uint64_t runs = 0;
  std::uint64_t failures = 0;
  std::uint64_t removals = 0;
  std::uint64_t gaps = 0;  // kept but unsupported (expected only for exact)
};

struct FuzzReport {
  std::uint64_t instances = 0;
  std::vector<FuzzViolation> violations;  // ordered by (index, mode)
  std::vector<std::pair<Mode, ModeTally>> tallies;

  bool ok() const { return violations.empty(); }
};

// Checks one instance under one mode, appending to `violations`.
void CheckInstance(const Instance& instance, Mode mode, std::uint64_t index,
                   std::uint64_t cap, std::vector<FuzzViolation>& violations,
                   ModeTally& tally);

// Serial reference path.
FuzzReport RunFuzzSerial(const FuzzOptions& options);
// OpenMP across instances. Results are identical to RunFuzzSerial for any
// thread count.
FuzzReport RunFuzz(const FuzzOptions& options);

std::string DescribeViolation(const FuzzViolation& violation);

}  // namespace regcount

#endif  // REGCOUNT_FUZZ_H_
