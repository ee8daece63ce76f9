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
#include <cassert>
#include <vector>

namespace regcount {
namespace {

std::vector<Removal> LogSince(const DomainStore& store, std::size_t mark) {
  return {store.log().begin() + static_cast<std::ptrdiff_t>(mark),
          store.log().end()};
}

PropagationOutcome Finish(Status status, const DomainStore& store,
                          std::size_t mark, int passes) {
  return {status, LogSince(store, mark), passes};
}

// Only the rows the one-sided propagators read.
SweepTable MinSide(const CounterDfa& dfa, const DomainStore& store) {
  SweepTable t;
  t.pre_min = Forward(dfa, store, Extremum::kMin);
  t.suf_min = Backward(dfa, store, t.pre_min.row(store.num_vars()),
                       Extremum::kMin);
  return t;
}

SweepTable MaxSide(const CounterDfa& dfa, const DomainStore& store) {
  SweepTable t;
  t.pre_max = Forward(dfa, store, Extremum::kMax);
  t.suf_max = Backward(dfa, store, t.pre_max.row(store.num_vars()),
                       Extremum::kMax);
  return t;
}

Counter BestCost(int i, SymbolId symbol, const SweepRows& pre,
                 const SweepRows& suf, const CounterDfa& dfa,
                 Extremum extremum) {
  Counter best = kUnreachable;
  std::span<const Counter> before = pre.row(i - 1);
  std::span<const Counter> after = suf.row(i + 1);
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    if (before[q] == kUnreachable) continue;
    const Counter tail = after[dfa.Next(q, symbol)];
    if (tail == kUnreachable) continue;
    const Counter cost =
        CheckedAdd(CheckedAdd(before[q], dfa.Increment(q, symbol)), tail);
    if (best == kUnreachable ||
        (extremum == Extremum::kMin ? cost < best : cost > best)) {
      best = cost;
    }
  }
  return best;
}

// Removes every value of x_i for which `prune` holds. Returns false if a
// domain emptied.
template <typename Pred>
bool PruneSequence(DomainStore& store, Pred prune) {
  for (int i = 1; i <= store.num_vars(); ++i) {
    for (SymbolId l : store.var(i - 1).Values()) {
      if (prune(i, l) &&
          store.RemoveSymbol(i - 1, l) == RemoveResult::kEmptied) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::string_view ModeName(Mode mode) {
  switch (mode) {
    case Mode::kAtMost:
      return "atmost";
    case Mode::kAtLeast:
      return "atleast";
    case Mode::kExact:
      return "exact";
    case Mode::kDecomposedExact:
      return "decomposed";
  }
  return "?";
}

std::optional<Mode> ParseMode(std::string_view name) {
  if (name == "atmost") return Mode::kAtMost;
  if (name == "atleast") return Mode::kAtLeast;
  if (name == "exact") return Mode::kExact;
  if (name == "decomposed") return Mode::kDecomposedExact;
  return std::nullopt;
}

Relation RelationOf(Mode mode) {
  switch (mode) {
    case Mode::kAtMost:
      return Relation::kLessEqual;
    case Mode::kAtLeast:
      return Relation::kGreaterEqual;
    case Mode::kExact:
    case Mode::kDecomposedExact:
      return Relation::kEqual;
  }
  return Relation::kEqual;
}

bool Satisfies(Relation relation, Counter counter, Counter n_value) {
  switch (relation) {
    case Relation::kLessEqual:
      return counter <= n_value;
    case Relation::kGreaterEqual:
      return counter >= n_value;
    case Relation::kEqual:
      return counter == n_value;
  }
  return false;
}

bool FeasibleAtMost(const SweepTable& table, const DomainStore& store) {
  if (store.counter().empty()) return false;
  const Counter lowest = GlobalMin(table.pre_min);
  return lowest != kUnreachable && lowest <= store.max_counter();
}

bool FeasibleAtLeast(const SweepTable& table, const DomainStore& store) {
  if (store.counter().empty()) return false;
  const Counter highest = GlobalMax(table.pre_max);
  return highest != kUnreachable && highest >= store.min_counter();
}

Counter MinCost(int i, SymbolId symbol, const SweepTable& table,
                const CounterDfa& dfa) {
  return BestCost(i, symbol, table.pre_min, table.suf_min, dfa,
                  Extremum::kMin);
}

Counter MaxCost(int i, SymbolId symbol, const SweepTable& table,
                const CounterDfa& dfa) {
  return BestCost(i, symbol, table.pre_max, table.suf_max, dfa,
                  Extremum::kMax);
}

PropagationOutcome PropagateAtMost(const CounterDfa& dfa, DomainStore& store) {
  const std::size_t mark = store.log().size();
  if (store.AnyEmpty()) return Finish(Status::kFailed, store, mark, 0);
  const SweepTable table = MinSide(dfa, store);
  if (!FeasibleAtMost(table, store)) {
    return Finish(Status::kFailed, store, mark, 1);
  }
  const Counter bound = store.max_counter();
  const bool ok = PruneSequence(store, [&](int i, SymbolId l) {
    return MinCost(i, l, table, dfa) > bound;
  });
  // Feasibility guarantees a minimum-cost string whose symbols all survive.
  assert(ok);
  const Counter lowest = GlobalMin(table);
  for (Counter v : std::vector<Counter>(store.counter().values())) {
    if (v >= lowest) break;
    store.RemoveCounterValue(v);
  }
  return Finish(ok ? Status::kFixpoint : Status::kFailed, store, mark, 1);
}

PropagationOutcome PropagateAtLeast(const CounterDfa& dfa,
                                    DomainStore& store) {
  const std::size_t mark = store.log().size();
  if (store.AnyEmpty()) return Finish(Status::kFailed, store, mark, 0);
  const SweepTable table = MaxSide(dfa, store);
  if (!FeasibleAtLeast(table, store)) {
    return Finish(Status::kFailed, store, mark, 1);
  }
  const Counter bound = store.min_counter();
  const bool ok = PruneSequence(store, [&](int i, SymbolId l) {
    const Counter best = MaxCost(i, l, table, dfa);
    return best == kUnreachable || best < bound;
  });
  assert(ok);
  const Counter highest = GlobalMax(table);
  std::vector<Counter> values = store.counter().values();
  for (auto it = values.rbegin(); it != values.rend() && *it > highest; ++it) {
    store.RemoveCounterValue(*it);
  }
  return Finish(ok ? Status::kFixpoint : Status::kFailed, store, mark, 1);
}

PropagationOutcome PropagateExact(const CounterDfa& dfa, DomainStore& store) {
  const std::size_t mark = store.log().size();
  const int n = store.num_vars();
  int passes = 0;
  while (true) {
    if (store.AnyEmpty()) return Finish(Status::kFailed, store, mark, passes);
    const SweepTable table = ComputeSweeps(dfa, store);
    ++passes;
    const CounterDomain& counter = store.counter();
    if (!counter.Intersects(GlobalMin(table), GlobalMax(table))) {
      return Finish(Status::kFailed, store, mark, passes);
    }
    const std::size_t before = store.log().size();

    // x_i loses l when, from every reachable state before position i, the
    // counter interval of strings through l misses dom(N).
    const bool ok = PruneSequence(store, [&](int i, SymbolId l) {
      std::span<const Counter> lo_before = table.pre_min.row(i - 1);
      std::span<const Counter> hi_before = table.pre_max.row(i - 1);
      std::span<const Counter> lo_after = table.suf_min.row(i + 1);
      std::span<const Counter> hi_after = table.suf_max.row(i + 1);
      for (StateId q = 0; q < dfa.num_states(); ++q) {
        if (lo_before[q] == kUnreachable) continue;
        assert(hi_before[q] != kUnreachable);
        const StateId target = dfa.Next(q, l);
        if (lo_after[target] == kUnreachable) continue;
        const Counter inc = dfa.Increment(q, l);
        const Counter lo = CheckedAdd(CheckedAdd(lo_before[q], inc),
                                      lo_after[target]);
        const Counter hi = CheckedAdd(CheckedAdd(hi_before[q], inc),
                                      hi_after[target]);
        if (store.counter().Intersects(lo, hi)) return false;
      }
      return true;
    });
    if (!ok) return Finish(Status::kFailed, store, mark, passes);

    // N keeps v only if some final state's [min, max] covers it.
    std::span<const Counter> lo_last = table.pre_min.row(n);
    std::span<const Counter> hi_last = table.pre_max.row(n);
    for (Counter v : std::vector<Counter>(store.counter().values())) {
      bool covered = false;
      for (StateId q = 0; q < dfa.num_states() && !covered; ++q) {
        covered = lo_last[q] != kUnreachable && lo_last[q] <= v &&
                  v <= hi_last[q];
      }
      if (!covered &&
          store.RemoveCounterValue(v) == RemoveResult::kEmptied) {
        return Finish(Status::kFailed, store, mark, passes);
      }
    }
    if (store.log().size() == before) break;
  }
  return Finish(Status::kFixpoint, store, mark, passes);
}

PropagationOutcome PropagateDecomposed(const CounterDfa& dfa,
                                       DomainStore& store) {
  const std::size_t mark = store.log().size();
  int passes = 0;
  // Both sides are idempotent: once the atleast step removes nothing, a
  // further atmost step would not either.
  while (true) {
    PropagationOutcome most = PropagateAtMost(dfa, store);
    passes += most.passes;
    if (most.failed()) return Finish(Status::kFailed, store, mark, passes);
    PropagationOutcome least = PropagateAtLeast(dfa, store);
    passes += least.passes;
    if (least.failed()) return Finish(Status::kFailed, store, mark, passes);
    if (least.removals.empty()) break;
  }
  return Finish(Status::kFixpoint, store, mark, passes);
}

PropagationOutcome Propagate(Mode mode, const CounterDfa& dfa,
                             DomainStore& store) {
  switch (mode) {
    case Mode::kAtMost:
      return PropagateAtMost(dfa, store);
    case Mode::kAtLeast:
      return PropagateAtLeast(dfa, store);
    case Mode::kExact:
      return PropagateExact(dfa, store);
    case Mode::kDecomposedExact:
      return PropagateDecomposed(dfa, store);
  }
  return {};
}

}  // namespace regcount
