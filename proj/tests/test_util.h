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

#ifndef REGCOUNT_TESTS_TEST_UTIL_H_
#define REGCOUNT_TESTS_TEST_UTIL_H_

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "regcount/automaton.h"
#include "regcount/domains.h"
#include "regcount/generator.h"
#include "regcount/sweep.h"

namespace regcount::testing {

// Desk-scale fuzz shape: |Q| <= 5, |Sigma| <= 4, n <= 6.
inline GenConfig SmallConfig(int min_length = 0) {
  GenConfig cfg;
  cfg.max_states = 5;
  cfg.min_alphabet = 2;
  cfg.max_alphabet = 4;
  cfg.min_length = min_length;
  cfg.max_length = 6;
  return cfg;
}

// Calls `fn` on every admissible word over positions [from, to).
inline void ForEachWord(const DomainStore& store, int from, int to,
                        const std::function<void(const std::vector<SymbolId>&)>& fn) {
  std::vector<SymbolId> word;
  std::function<void(int)> rec = [&](int i) {
    if (i == to) {
      fn(word);
      return;
    }
    for (SymbolId l : store.var(i).Values()) {
      word.push_back(l);
      rec(i + 1);
      word.pop_back();
    }
  };
  rec(from);
}

inline void Relax(Counter& slot, Counter c, Extremum e) {
  if (slot == kUnreachable || (e == Extremum::kMin ? c < slot : c > slot)) {
    slot = c;
  }
}

// Prefix row i straight from the definition: run every admissible prefix.
inline std::vector<Counter> BrutePrefixRow(const CounterDfa& dfa,
                                           const DomainStore& store, int i,
                                           Extremum e) {
  std::vector<Counter> row(dfa.num_states(), kUnreachable);
  ForEachWord(store, 0, i, [&](const std::vector<SymbolId>& w) {
    const RunResult r = Run(dfa, w);
    Relax(row[r.end_state], r.counter, e);
  });
  return row;
}

inline std::set<StateId> BruteFinalStates(const CounterDfa& dfa,
                                          const DomainStore& store) {
  std::set<StateId> finals;
  ForEachWord(store, 0, store.num_vars(), [&](const std::vector<SymbolId>& w) {
    finals.insert(Run(dfa, w).end_state);
  });
  return finals;
}

// Suffix row i (1-based, 1..n+1): best cost from each state over admissible
// suffixes s_i..s_n that end in a state some full admissible word reaches.
inline std::vector<Counter> BruteSuffixRow(const CounterDfa& dfa,
                                           const DomainStore& store, int i,
                                           Extremum e) {
  const std::set<StateId> finals = BruteFinalStates(dfa, store);
  std::vector<Counter> row(dfa.num_states(), kUnreachable);
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    ForEachWord(store, i - 1, store.num_vars(),
                [&](const std::vector<SymbolId>& w) {
                  const RunResult r = RunFrom(dfa, q, w);
                  if (finals.count(r.end_state)) Relax(row[q], r.counter, e);
                });
  }
  return row;
}

inline std::vector<Counter> ToVector(std::span<const Counter> row) {
  return {row.begin(), row.end()};
}

// Store over `dfa` from lists of symbol names per position.
inline DomainStore MakeStore(const CounterDfa& dfa,
                             const std::vector<std::vector<std::string>>& vars,
                             CounterDomain counter) {
  std::vector<SymbolDomain> domains;
  for (const auto& names : vars) {
    SymbolDomain d = SymbolDomain::Empty(dfa.alphabet_size());
    for (const std::string& name : names) d.Insert(*dfa.FindSymbol(name));
    domains.push_back(std::move(d));
  }
  return DomainStore(std::move(domains), std::move(counter));
}

}  // namespace regcount::testing

#endif  // REGCOUNT_TESTS_TEST_UTIL_H_
