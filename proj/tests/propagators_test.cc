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

#include "regcount/propagators.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "regcount/catalog.h"
#include "regcount/generator.h"
#include "regcount/oracle.h"
#include "test_util.h"

namespace regcount {
namespace {

using testing::MakeStore;

Removal X(int position, const CounterDfa& dfa, const std::string& symbol) {
  return {position - 1, static_cast<Counter>(*dfa.FindSymbol(symbol))};
}
Removal NValue(Counter v) { return {kCounterVar, v}; }

std::set<Removal> AsSet(const std::vector<Removal>& removals) {
  return {removals.begin(), removals.end()};
}

class AutomatonB : public ::testing::Test {
 protected:
  const CounterDfa b_ = Catalog("B");
  DomainStore TwoX2(CounterDomain n) const {
    return MakeStore(b_, {{"2"}, {"1", "2"}, {"2"}}, std::move(n));
  }
};

TEST(ModeTest, NamesRoundTrip) {
  for (Mode m : {Mode::kAtMost, Mode::kAtLeast, Mode::kExact,
                 Mode::kDecomposedExact}) {
    EXPECT_EQ(ParseMode(ModeName(m)), m);
  }
  EXPECT_FALSE(ParseMode("sometimes").has_value());
  EXPECT_TRUE(Satisfies(Relation::kLessEqual, 2, 2));
  EXPECT_FALSE(Satisfies(Relation::kLessEqual, 3, 2));
  EXPECT_TRUE(Satisfies(Relation::kGreaterEqual, 3, 2));
  EXPECT_FALSE(Satisfies(Relation::kEqual, 3, 2));
}

TEST_F(AutomatonB, FeasibilityAndCosts) {
  const DomainStore store = TwoX2({0, 1, 2});
  const SweepTable t = ComputeSweeps(b_, store);
  EXPECT_TRUE(FeasibleAtMost(t, store));
  EXPECT_TRUE(FeasibleAtMost(t, TwoX2({0})));
  EXPECT_EQ(MinCost(2, *b_.FindSymbol("2"), t, b_), 2u);
  EXPECT_EQ(MinCost(2, *b_.FindSymbol("1"), t, b_), 0u);
  EXPECT_EQ(MaxCost(2, *b_.FindSymbol("1"), t, b_), 0u);
  EXPECT_EQ(MaxCost(2, *b_.FindSymbol("2"), t, b_), 2u);
}

TEST(CostTest, GroundWordCostIsRunCounter) {
  const CounterDfa rst = Catalog("RST");
  const std::vector<std::string> word = {"r", "r", "t", "r", "s", "r"};
  std::vector<std::vector<std::string>> vars;
  for (const auto& s : word) vars.push_back({s});
  const DomainStore store = MakeStore(rst, vars, CounterDomain{0});
  const SweepTable t = ComputeSweeps(rst, store);
  std::vector<SymbolId> ids;
  for (const auto& s : word) ids.push_back(*rst.FindSymbol(s));
  const Counter c = regcount::Run(rst, ids).counter;
  for (int i = 1; i <= 6; ++i) {
    EXPECT_EQ(MinCost(i, ids[i - 1], t, rst), c);
    EXPECT_EQ(MaxCost(i, ids[i - 1], t, rst), c);
  }
}

TEST_F(AutomatonB, AtMostKeepsEverythingWithWideN) {
  DomainStore store = TwoX2({0, 1, 2});
  const PropagationOutcome out = PropagateAtMost(b_, store);
  EXPECT_FALSE(out.failed());
  EXPECT_TRUE(out.removals.empty());
}

TEST_F(AutomatonB, AtMostRemovesExpensiveValue) {
  DomainStore store = TwoX2({0});
  const PropagationOutcome out = PropagateAtMost(b_, store);
  EXPECT_FALSE(out.failed());
  EXPECT_EQ(AsSet(out.removals), (std::set<Removal>{X(2, b_, "2")}));
}

TEST_F(AutomatonB, AtLeastRemovesCheapValue) {
  DomainStore store = TwoX2({2});
  const PropagationOutcome out = PropagateAtLeast(b_, store);
  EXPECT_FALSE(out.failed());
  EXPECT_EQ(AsSet(out.removals), (std::set<Removal>{X(2, b_, "1")}));
}

TEST(AtLeastTest, ZeroIsVacuous) {
  const GenConfig cfg = testing::SmallConfig();
  for (std::uint64_t k = 0; k < 200; ++k) {
    Instance inst = CorpusInstance(cfg, 9, k);
    DomainStore store(inst.store.vars(), CounterDomain{0});
    const PropagationOutcome out = PropagateAtLeast(inst.dfa, store);
    EXPECT_FALSE(out.failed());
    EXPECT_TRUE(out.removals.empty());
  }
}

TEST(AtLeastTest, RstReachesFour) {
  const CounterDfa rst = Catalog("RST");
  DomainStore store = MakeStore(
      rst, std::vector<std::vector<std::string>>(6, {"r", "t"}),
      CounterDomain{4});
  EXPECT_FALSE(PropagateAtLeast(rst, store).failed());
  DomainStore five = MakeStore(
      rst, std::vector<std::vector<std::string>>(6, {"r", "t"}),
      CounterDomain{5});
  EXPECT_TRUE(PropagateAtLeast(rst, five).failed());
}

TEST(AtMostTest, AabLengthThree) {
  const CounterDfa aab = Catalog("AAB");
  DomainStore store = MakeStore(
      aab, std::vector<std::vector<std::string>>(3, {"a", "b"}),
      CounterDomain{1});
  const PropagationOutcome out = PropagateAtMost(aab, store);
  EXPECT_FALSE(out.failed());
  EXPECT_TRUE(out.removals.empty());
}

TEST_F(AutomatonB, ExactWitnessRemovesLastTwo) {
  DomainStore store = MakeStore(
      b_, {{"2"}, {"1", "2"}, {"1"}, {"1", "2"}, {"1", "2"}}, CounterDomain{1});
  const PropagationOutcome out = PropagateExact(b_, store);
  EXPECT_FALSE(out.failed());
  EXPECT_TRUE(AsSet(out.removals).count(X(5, b_, "2")));
  EXPECT_FALSE(store.var(4).Contains(*b_.FindSymbol("2")));
}

TEST_F(AutomatonB, DecomposedMissesLastTwo) {
  DomainStore store = MakeStore(
      b_, {{"2"}, {"1", "2"}, {"1"}, {"1", "2"}, {"1", "2"}}, CounterDomain{1});
  const PropagationOutcome out = PropagateDecomposed(b_, store);
  EXPECT_FALSE(out.failed());
  EXPECT_FALSE(AsSet(out.removals).count(X(5, b_, "2")));
}

TEST_F(AutomatonB, ExactMissesUnsupportedValue) {
  DomainStore store = MakeStore(b_, {{"2"}, {"2"}, {"1", "2"}, {"2"}, {"1", "2"}},
                                CounterDomain{1, 3});
  const PropagationOutcome out = PropagateExact(b_, store);
  EXPECT_FALSE(out.failed());
  EXPECT_FALSE(AsSet(out.removals).count(X(5, b_, "2")));
}

TEST_F(AutomatonB, DecomposedKeepsUnsupportedCounter) {
  DomainStore store = TwoX2({0, 1, 2});
  const PropagationOutcome out = PropagateDecomposed(b_, store);
  EXPECT_FALSE(out.failed());
  EXPECT_FALSE(AsSet(out.removals).count(NValue(1)));
}

TEST_F(AutomatonB, ExactCounterPruningIsSubsetOfUnsupported) {
  DomainStore store = TwoX2({0, 1, 2});
  const PropagationOutcome out = PropagateExact(b_, store);
  EXPECT_FALSE(out.failed());
  for (const Removal& r : out.removals) {
    EXPECT_EQ(r, NValue(1));
  }
}

TEST(DecomposedTest, GroundSatisfiableIsUntouched) {
  const CounterDfa aab = Catalog("AAB");
  DomainStore store = MakeStore(aab, {{"a"}, {"a"}, {"b"}}, CounterDomain{1});
  for (Mode m : {Mode::kAtMost, Mode::kAtLeast, Mode::kExact,
                 Mode::kDecomposedExact}) {
    DomainStore copy = store;
    const PropagationOutcome out = Propagate(m, aab, copy);
    EXPECT_FALSE(out.failed()) << ModeName(m);
    EXPECT_TRUE(out.removals.empty()) << ModeName(m);
  }
}

TEST(PropagateTest, RemovalsMatchStoreLog) {
  const GenConfig cfg = testing::SmallConfig(1);
  for (std::uint64_t k = 0; k < 300; ++k) {
    const Instance inst = CorpusInstance(cfg, 4, k);
    for (Mode m : {Mode::kAtMost, Mode::kAtLeast, Mode::kExact,
                   Mode::kDecomposedExact}) {
      DomainStore store = inst.store;
      store.ClearLog();
      const PropagationOutcome out = Propagate(m, inst.dfa, store);
      EXPECT_EQ(out.removals, store.log());
      DomainStore replay = inst.store;
      for (const Removal& r : out.removals) replay.Apply(r);
      EXPECT_TRUE(replay.SameDomains(store));
    }
  }
}

// Property checks against the oracle over a fuzz corpus.
class PropagatorProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(PropagatorProperties, DomainConsistentAndIdempotent) {
  const GenConfig cfg = testing::SmallConfig(1);
  for (std::uint64_t k = 0; k < 250; ++k) {
    const Instance inst = CorpusInstance(cfg, GetParam(), k);
    for (Mode m : {Mode::kAtMost, Mode::kAtLeast}) {
      DomainStore store = inst.store;
      const PropagationOutcome out = Propagate(m, inst.dfa, store);
      const DcVerdict v = CheckDc(inst.dfa, inst.store, store, out, m);
      EXPECT_TRUE(v.clean()) << ModeName(m) << " instance " << k;
      const SupportReport support =
          Enumerate(inst.dfa, inst.store, RelationOf(m));
      EXPECT_EQ(out.failed(), !support.satisfiable) << k;
      if (!out.failed()) {
        const PropagationOutcome again = Propagate(m, inst.dfa, store);
        EXPECT_FALSE(again.failed());
        EXPECT_TRUE(again.removals.empty()) << ModeName(m) << " " << k;
      }
    }
  }
}

TEST_P(PropagatorProperties, ExactSoundAndStronger) {
  const GenConfig cfg = testing::SmallConfig(1);
  for (std::uint64_t k = 0; k < 250; ++k) {
    const Instance inst = CorpusInstance(cfg, GetParam(), k);
    DomainStore exact = inst.store;
    const PropagationOutcome e = PropagateExact(inst.dfa, exact);
    const DcVerdict v =
        CheckDc(inst.dfa, inst.store, exact, e, Mode::kExact);
    EXPECT_TRUE(v.unsound.empty()) << k;
    const SupportReport support =
        Enumerate(inst.dfa, inst.store, Relation::kEqual);
    if (e.failed()) EXPECT_FALSE(support.satisfiable) << k;

    DomainStore decomposed = inst.store;
    const PropagationOutcome d = PropagateDecomposed(inst.dfa, decomposed);
    if (d.failed()) {
      EXPECT_TRUE(e.failed()) << k;
    } else if (!e.failed()) {
      const std::set<Removal> er = AsSet(e.removals);
      for (const Removal& r : d.removals) EXPECT_TRUE(er.count(r)) << k;
    }

    std::uint64_t bound = inst.store.counter().size() + 1;
    for (const SymbolDomain& dom : inst.store.vars()) bound += dom.size();
    EXPECT_LE(static_cast<std::uint64_t>(e.passes), bound);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, PropagatorProperties,
                         ::testing::Values(1u, 2u, 3u));

}  // namespace
}  // namespace regcount
