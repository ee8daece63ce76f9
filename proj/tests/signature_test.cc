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

#include "regcount/signature.h"

#include <algorithm>
#include <map>
#include <vector>

#include "gtest/gtest.h"
#include "regcount/catalog.h"
#include "regcount/generator.h"
#include "regcount/oracle.h"
#include "test_util.h"

namespace regcount {
namespace {

class AmongSignature : public ::testing::Test {
 protected:
  const CounterDfa among_ = Catalog("AMONG");
  const SymbolId in_ = *among_.FindSymbol("in");
  const SymbolId notin_ = *among_.FindSymbol("notin");

  SignatureMap Make(std::vector<NativeValue> set, NativeDomain universe) {
    const std::vector<NativeDomain> universes = {std::move(universe)};
    return SignatureMap::Among(among_, set, universes);
  }
};

TEST_F(AmongSignature, Project) {
  const NativeDomain u = {1, 2, 3};
  const SignatureMap sig = Make({2, 5}, u);
  EXPECT_EQ(Project(sig, {1, 2, 3}, 0), SymbolDomain::Of(2, {in_, notin_}));
  EXPECT_EQ(Project(sig, {1, 3}, 0), SymbolDomain::Of(2, {notin_}));
  EXPECT_EQ(Project(sig, {2}, 0), SymbolDomain::Of(2, {in_}));
}

TEST_F(AmongSignature, ChannelBack) {
  const SignatureMap sig = Make({2}, {1, 2, 3});
  NativeDomain native = {1, 2, 3};
  ChannelResult r = ChannelBack(sig, native, SymbolDomain::Of(2, {in_}), 0);
  EXPECT_EQ(native, (NativeDomain{1, 3}));
  EXPECT_EQ(r.removed, (std::vector<NativeValue>{2}));
  EXPECT_FALSE(r.emptied);
  EXPECT_FALSE(Project(sig, native, 0).Contains(in_));

  r = ChannelBack(sig, native, SymbolDomain::Empty(2), 0);
  EXPECT_TRUE(r.removed.empty());
  EXPECT_EQ(native, (NativeDomain{1, 3}));

  NativeDomain all = {1, 2, 3};
  r = ChannelBack(sig, all, SymbolDomain::Full(2), 0);
  EXPECT_TRUE(r.emptied);
  EXPECT_TRUE(all.empty());
}

TEST_F(AmongSignature, MapOutsideUniverseThrows) {
  const SignatureMap sig = Make({2}, {1, 2, 3});
  EXPECT_EQ(sig.Map(0, 2), in_);
  EXPECT_THROW(sig.Map(0, 9), Error);
}

TEST(SignatureMapTest, AmongNeedsInAndNotin) {
  const std::vector<NativeDomain> universes = {{0, 1}};
  const std::vector<NativeValue> set = {1};
  EXPECT_THROW(SignatureMap::Among(Catalog("AAB"), set, universes), Error);
}

TEST(SignatureMapTest, NativeDomainIsSortedAndUnique) {
  EXPECT_EQ(MakeNativeDomain({3, 1, 3, -2}), (NativeDomain{-2, 1, 3}));
}

void ExpectCompositeMatchesOracle(Mode mode, const CounterDfa& dfa,
                                  const SignatureMap& sig,
                                  const NativeStore& before, int tag) {
  NativeStore after = before;
  const CompositeOutcome out = PropagateWithSignature(mode, dfa, sig, after);
  const NativeSupportReport support =
      EnumerateNative(dfa, sig, before, RelationOf(mode));
  if (!support.satisfiable) {
    EXPECT_TRUE(out.failed()) << ModeName(mode) << " " << tag;
    return;
  }
  ASSERT_FALSE(out.failed()) << ModeName(mode) << " " << tag;
  EXPECT_EQ(after.vars, support.supported) << ModeName(mode) << " " << tag;
  EXPECT_EQ(after.counter, support.supported_counter)
      << ModeName(mode) << " " << tag;
}

TEST(CompositeTest, AmongFixpointIsDomainConsistent) {
  GenConfig cfg = testing::SmallConfig(1);
  cfg.max_length = 5;
  for (std::uint64_t k = 0; k < 400; ++k) {
    SplitMix64 rng = SplitMix64::Stream(11, k);
    for (Mode m : {Mode::kAtMost, Mode::kAtLeast}) {
      const Instance inst = RandomAmongInstance(cfg, rng, m);
      ExpectCompositeMatchesOracle(m, inst.dfa, inst.signature->map,
                                   inst.signature->natives, static_cast<int>(k));
    }
  }
}

TEST(CompositeTest, RandomTablesOnRandomAutomata) {
  GenConfig cfg = testing::SmallConfig(1);
  cfg.max_length = 4;
  for (std::uint64_t k = 0; k < 300; ++k) {
    SplitMix64 rng = SplitMix64::Stream(12, k);
    const CounterDfa dfa = RandomCdfa(cfg, rng);
    const int n = rng.UniformInt(1, cfg.max_length);
    std::vector<std::map<NativeValue, SymbolId>> tables(n);
    NativeStore natives;
    for (int i = 0; i < n; ++i) {
      std::vector<NativeValue> dom;
      for (NativeValue v = -2; v <= 3; ++v) {
        tables[i][v] = rng.UniformInt(0, dfa.alphabet_size() - 1);
        if (rng.Bernoulli(0.6)) dom.push_back(v);
      }
      if (dom.empty()) dom.push_back(0);
      natives.vars.push_back(MakeNativeDomain(dom));
    }
    natives.counter = RandomCounterDomain(
        static_cast<CounterShape>(rng.UniformInt(0, 3)), n, rng);
    const SignatureMap sig(dfa.alphabet_size(), tables);
    for (Mode m : {Mode::kAtMost, Mode::kAtLeast}) {
      ExpectCompositeMatchesOracle(m, dfa, sig, natives, static_cast<int>(k));
    }
    // Exact with channeling stays sound.
    NativeStore after = natives;
    const CompositeOutcome out =
        PropagateWithSignature(Mode::kExact, dfa, sig, after);
    const NativeSupportReport support =
        EnumerateNative(dfa, sig, natives, Relation::kEqual);
    if (out.failed()) {
      EXPECT_FALSE(support.satisfiable) << k;
    } else {
      for (int i = 0; i < n; ++i) {
        for (NativeValue v : support.supported[i]) {
          EXPECT_TRUE(std::binary_search(after.vars[i].begin(),
                                         after.vars[i].end(), v))
              << k;
        }
      }
      for (Counter v : support.supported_counter.values()) {
        EXPECT_TRUE(after.counter.Contains(v)) << k;
      }
    }
  }
}

TEST(CompositeTest, TooFewPositionsThrows) {
  const CounterDfa among = Catalog("AMONG");
  const std::vector<NativeDomain> universes = {{0, 1}};
  const std::vector<NativeValue> set = {1};
  const SignatureMap sig = SignatureMap::Among(among, set, universes);
  NativeStore store{{{0, 1}, {0, 1}}, CounterDomain{1}};
  EXPECT_THROW(PropagateWithSignature(Mode::kAtMost, among, sig, store), Error);
}

}  // namespace
}  // namespace regcount
