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

#include "regcount/sweep.h"

namespace regcount {
namespace {

// Relaxes `slot` toward `candidate`. kUnreachable is +inf for minimum rows
// and -inf for maximum rows, so an unreachable slot always takes the
// candidate.
inline void Relax(Counter& slot, Counter candidate, Extremum extremum) {
  if (slot == kUnreachable) {
    slot = candidate;
  } else if (extremum == Extremum::kMin ? candidate < slot
                                        : candidate > slot) {
    slot = candidate;
  }
}

}  // namespace

SweepRows Forward(const CounterDfa& dfa, const DomainStore& store,
                  Extremum extremum) {
  const int n = store.num_vars();
  const int num_states = dfa.num_states();
  SweepRows rows(0, n + 1, num_states);
  rows.mutable_row(0)[dfa.start()] = 0;
  for (int i = 1; i <= n; ++i) {
    std::span<const Counter> prev = rows.row(i - 1);
    std::span<Counter> cur = rows.mutable_row(i);
    const SymbolDomain& dom = store.var(i - 1);
    for (StateId q = 0; q < num_states; ++q) {
      const Counter c = prev[q];
      if (c == kUnreachable) continue;
      dom.ForEach([&](SymbolId l) {
        Relax(cur[dfa.Next(q, l)], CheckedAdd(c, dfa.Increment(q, l)),
              extremum);
      });
    }
  }
  return rows;
}

SweepRows Backward(const CounterDfa& dfa, const DomainStore& store,
                   std::span<const Counter> forward_last, Extremum extremum) {
  const int n = store.num_vars();
  const int num_states = dfa.num_states();
  SweepRows rows(1, n + 1, num_states);
  std::span<Counter> last = rows.mutable_row(n + 1);
  for (StateId q = 0; q < num_states; ++q) {
    if (forward_last[q] != kUnreachable) last[q] = 0;
  }
  for (int i = n; i >= 1; --i) {
    std::span<const Counter> next = rows.row(i + 1);
    std::span<Counter> cur = rows.mutable_row(i);
    const SymbolDomain& dom = store.var(i - 1);
    for (StateId q = 0; q < num_states; ++q) {
      dom.ForEach([&](SymbolId l) {
        const Counter tail = next[dfa.Next(q, l)];
        if (tail == kUnreachable) return;
        Relax(cur[q], CheckedAdd(tail, dfa.Increment(q, l)), extremum);
      });
    }
  }
  return rows;
}

SweepTable ComputeSweeps(const CounterDfa& dfa, const DomainStore& store) {
  SweepTable table;
  const int n = store.num_vars();
  table.pre_min = Forward(dfa, store, Extremum::kMin);
  table.pre_max = Forward(dfa, store, Extremum::kMax);
  table.suf_min = Backward(dfa, store, table.pre_min.row(n), Extremum::kMin);
  table.suf_max = Backward(dfa, store, table.pre_max.row(n), Extremum::kMax);
  return table;
}

Counter GlobalMin(const SweepRows& pre_min) {
  Counter best = kUnreachable;
  for (Counter c : pre_min.row(pre_min.last_row())) {
    if (c != kUnreachable && (best == kUnreachable || c < best)) best = c;
  }
  return best;
}

Counter GlobalMax(const SweepRows& pre_max) {
  Counter best = kUnreachable;
  for (Counter c : pre_max.row(pre_max.last_row())) {
    if (c != kUnreachable && (best == kUnreachable || c > best)) best = c;
  }
  return best;
}

}  // namespace regcount
