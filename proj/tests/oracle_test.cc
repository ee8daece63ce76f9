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

#include "regcount/oracle.h"

#include <algorithm>
#include <map>
#include <vector>

#include "gtest/gtest.h"
#include "regcount/catalog.h"
#include "regcount/generator.h"
#include "regcount/instance.h"
#include "test_util.h"

namespace regcount {
namespace {

using testing::MakeStore;

class AutomatonB : public ::testing::Test {
 protected:
  const CounterDfa b_ = Catalog("B");
  const SymbolId one_ = *b_.FindSymbol("1");
  const SymbolId two_ = *b_.FindSymbol("2");
};

TEST_F(AutomatonB, CounterOneHasNoSupport) {
  const DomainStore store =
      MakeStore(b_, {{"2"}, {"1", "2"}, {"2"}}, CounterDomain{0, 1, 2});
  const SupportReport r = Enumerate(b_, store, Relation::kEqual);
  EXPECT_TRUE(r.satisfiable);
  EXPECT_EQ(r.supported_counter, (CounterDomain{0, 2}));
  EXPECT_EQ(r.solution_count, 2u);
  EXPECT_EQ(r.supported[1], SymbolDomain::Of(2, {one_, two_}));

  const SupportReport le = Enumerate(b_, store, Relation::kLessEqual);
  EXPECT_EQ(le.solution_count, 4u);
  EXPECT_EQ(le.supported_counter, (CounterDomain{0, 1, 2}));
  const SupportReport ge = Enumerate(b_, store, Relation::kGreaterEqual);
  EXPECT_EQ(ge.solution_count, 4u);
}

TEST_F(AutomatonB, LastTwoUnsupported) {
  const DomainStore store = MakeStore(
      b_, {{"2"}, {"1", "2"}, {"1"}, {"1", "2"}, {"1", "2"}}, CounterDomain{1});
  const SupportReport r = Enumerate(b_, store, Relation::kEqual);
  EXPECT_EQ(r.supported[4], SymbolDomain::Of(2, {one_}));
}

TEST_F(AutomatonB, ExactVerdictOnMissedInference) {
  const DomainStore before = MakeStore(
      b_, {{"2"}, {"2"}, {"1", "2"}, {"2"}, {"1", "2"}}, CounterDomain{1, 3});
  DomainStore after = before;
  const PropagationOutcome out = PropagateExact(b_, after);
  const DcVerdict v = CheckDc(b_, before, after, out, Mode::kExact);
  EXPECT_TRUE(v.unsound.empty());
  EXPECT_EQ(v.gaps, (std::vector<Removal>{{4, static_cast<Counter>(two_)}}));
}

TEST_F(AutomatonB, DecomposedVerdictHasCounterGap) {
  const DomainStore before =
      MakeStore(b_, {{"2"}, {"1", "2"}, {"2"}}, CounterDomain{0, 1, 2});
  DomainStore after = before;
  const PropagationOutcome out = PropagateDecomposed(b_, after);
  const DcVerdict v = CheckDc(b_, before, after, out, Mode::kDecomposedExact);
  EXPECT_TRUE(v.unsound.empty());
  EXPECT_NE(std::find(v.gaps.begin(), v.gaps.end(), Removal{kCounterVar, 1}),
            v.gaps.end());
}

TEST(SubsetSumTest, ThreeFiveSeven) {
  const std::vector<Counter> values = {3, 5, 7};
  const Instance sat = BuildSubsetSumInstance(values, 8);
  EXPECT_TRUE(Enumerate(sat.dfa, sat.store, Relation::kEqual).satisfiable);
  const Instance unsat = BuildSubsetSumInstance(values, 4);
  EXPECT_FALSE(Enumerate(unsat.dfa, unsat.store, Relation::kEqual).satisfiable);
  const Instance all = BuildSubsetSumInstance(values, 15);
  EXPECT_EQ(Enumerate(all.dfa, all.store, Relation::kEqual).solution_count, 1u);
}

TEST(EnumerateTest, CapExceeded) {
  const CounterDfa aab = Catalog("AAB");
  const DomainStore store(
      std::vector<SymbolDomain>(8, SymbolDomain::Full(2)), CounterDomain{0});
  EXPECT_EQ(CountGroundSequences(store), 256u);
  EXPECT_THROW(Enumerate(aab, store, Relation::kEqual, 100), CapExceeded);
  EXPECT_NO_THROW(Enumerate(aab, store, Relation::kEqual, 256));
}

TEST(EnumerateTest, SaturatingGroundCount) {
  const DomainStore store(
      std::vector<SymbolDomain>(70, SymbolDomain::Full(2)), CounterDomain{0});
  EXPECT_EQ(CountGroundSequences(store), ~std::uint64_t{0});
}

TEST(EnumerateTest, ReportInvariants) {
  const GenConfig cfg = testing::SmallConfig();
  for (std::uint64_t k = 0; k < 500; ++k) {
    const Instance inst = CorpusInstance(cfg, 21, k);
    const SupportReport eq = Enumerate(inst.dfa, inst.store, Relation::kEqual);
    const SupportReport le =
        Enumerate(inst.dfa, inst.store, Relation::kLessEqual);
    const SupportReport ge =
        Enumerate(inst.dfa, inst.store, Relation::kGreaterEqual);
    for (const SupportReport* r : {&eq, &le, &ge}) {
      EXPECT_EQ(r->satisfiable, r->solution_count > 0);
      bool all_nonempty = !r->supported_counter.empty();
      for (const SymbolDomain& d : r->supported) all_nonempty &= !d.empty();
      EXPECT_EQ(r->satisfiable, all_nonempty) << k;
    }
    for (int i = 0; i < inst.store.num_vars(); ++i) {
      eq.supported[i].ForEach([&](SymbolId l) {
        EXPECT_TRUE(le.supported[i].Contains(l)) << k;
        EXPECT_TRUE(ge.supported[i].Contains(l)) << k;
      });
    }
    for (Counter v : eq.supported_counter.values()) {
      EXPECT_TRUE(le.supported_counter.Contains(v)) << k;
      EXPECT_TRUE(ge.supported_counter.Contains(v)) << k;
    }
  }
}

TEST(EnumerateTest, NativeOdometerAgreesWithRecursion) {
  const GenConfig cfg = testing::SmallConfig();
  for (std::uint64_t k = 0; k < 300; ++k) {
    const Instance inst = CorpusInstance(cfg, 22, k);
    const int n = inst.store.num_vars();
    // Identity signature, listed in reverse to vary the visiting order.
    std::vector<std::map<NativeValue, SymbolId>> tables(n);
    NativeStore natives{{}, inst.store.counter()};
    for (int i = 0; i < n; ++i) {
      NativeDomain dom;
      for (SymbolId l = 0; l < inst.dfa.alphabet_size(); ++l) {
        tables[i][-l] = l;
        if (inst.store.var(i).Contains(l)) dom.push_back(-l);
      }
      natives.vars.push_back(MakeNativeDomain(dom));
    }
    const SignatureMap sig(inst.dfa.alphabet_size(), tables);
    for (Relation rel :
         {Relation::kLessEqual, Relation::kGreaterEqual, Relation::kEqual}) {
      const SupportReport a = Enumerate(inst.dfa, inst.store, rel);
      const NativeSupportReport b = EnumerateNative(inst.dfa, sig, natives, rel);
      EXPECT_EQ(a.solution_count, b.solution_count) << k;
      EXPECT_EQ(a.supported_counter, b.supported_counter) << k;
      for (int i = 0; i < n; ++i) {
        EXPECT_EQ(Project(sig, b.supported[i], i), a.supported[i]) << k;
      }
    }
  }
}

TEST(CompareTest, FailureRemovesEverything) {
  const CounterDfa b = Catalog("B");
  const DomainStore before =
      MakeStore(b, {{"2"}, {"1", "2"}, {"2"}}, CounterDomain{0, 1, 2});
  const SupportReport support = Enumerate(b, before, Relation::kEqual);
  const DcVerdict v = CompareWithSupport(support, before, before, true);
  // x1, x2 (two values), x3, N=0 and N=2 are supported.
  EXPECT_EQ(v.unsound.size(), 6u);
  EXPECT_TRUE(v.gaps.empty());
}

}  // namespace
}  // namespace regcount
