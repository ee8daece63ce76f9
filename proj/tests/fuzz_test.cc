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

#include "regcount/fuzz.h"

#include "gtest/gtest.h"
#include "test_util.h"

namespace regcount {
namespace {

FuzzOptions Options(std::uint64_t seed, std::uint64_t count) {
  FuzzOptions o;
  o.config = testing::SmallConfig(1);
  o.seed = seed;
  o.count = count;
  o.modes = {Mode::kAtMost, Mode::kAtLeast, Mode::kExact,
             Mode::kDecomposedExact};
  return o;
}

TEST(FuzzTest, CleanRun) {
  const FuzzReport r = RunFuzzSerial(Options(42, 500));
  EXPECT_EQ(r.instances, 500u);
  for (const FuzzViolation& v : r.violations) {
    ADD_FAILURE() << DescribeViolation(v);
  }
  ASSERT_EQ(r.tallies.size(), 4u);
  for (const auto& [mode, tally] : r.tallies) {
    EXPECT_EQ(tally.runs, 500u) << ModeName(mode);
    if (mode == Mode::kAtMost || mode == Mode::kAtLeast) {
      EXPECT_EQ(tally.gaps, 0u);
    }
  }
}

TEST(FuzzTest, ParallelMatchesSerial) {
  for (int threads : {1, 2, 4}) {
    FuzzOptions o = Options(7, 200);
    o.threads = threads;
    const FuzzReport p = RunFuzz(o);
    const FuzzReport s = RunFuzzSerial(o);
    EXPECT_EQ(p.instances, s.instances);
    EXPECT_EQ(p.violations.size(), s.violations.size());
    ASSERT_EQ(p.tallies.size(), s.tallies.size());
    for (std::size_t m = 0; m < s.tallies.size(); ++m) {
      EXPECT_EQ(p.tallies[m].first, s.tallies[m].first);
      EXPECT_EQ(p.tallies[m].second.runs, s.tallies[m].second.runs);
      EXPECT_EQ(p.tallies[m].second.failures, s.tallies[m].second.failures);
      EXPECT_EQ(p.tallies[m].second.removals, s.tallies[m].second.removals);
      EXPECT_EQ(p.tallies[m].second.gaps, s.tallies[m].second.gaps);
    }
  }
}

TEST(FuzzTest, ExactShowsGapsSomewhere) {
  // The exact propagator is incomplete, so a large enough corpus exposes
  // kept-but-unsupported values without counting them as violations.
  FuzzOptions o = Options(3, 2000);
  o.modes = {Mode::kExact};
  const FuzzReport r = RunFuzzSerial(o);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.tallies.at(0).second.gaps, 0u);
}

TEST(FuzzTest, CheckInstanceEnforcesCap) {
  const Instance inst = CorpusInstance(testing::SmallConfig(6), 1, 0);
  std::vector<FuzzViolation> violations;
  ModeTally tally;
  EXPECT_THROW(CheckInstance(inst, Mode::kAtMost, 0, 1, violations, tally),
               CapExceeded);
}

}  // namespace
}  // namespace regcount
