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

#ifndef REGCOUNT_PROPAGATORS_H_
#define REGCOUNT_PROPAGATORS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regcount/automaton.h"
#include "regcount/domains.h"
#include "regcount/sweep.h"

namespace regcount {

// kAtMost:  counter(X) <= N, domain consistent.
// kAtLeast: counter(X) >= N, domain consistent.
// kExact:   counter(X) == N, sound but incomplete.
// kDecomposedExact: counter(X) == N via the fixpoint of kAtMost and
//   kAtLeast; the weaker baseline kExact is measured against.
enum class Mode { kAtMost, kAtLeast, kExact, kDecomposedExact };

std::string_view ModeName(Mode mode);
std::optional<Mode> ParseMode(std::string_view name);

// The relation between the final counter and N a mode enforces. The
// decomposed mode enforces equality.
enum class Relation { kLessEqual, kGreaterEqual, kEqual };
Relation RelationOf(Mode mode);
bool Satisfies(Relation relation, Counter counter, Counter n_value);

enum class Status { kFixpoint, kFailed };

struct PropagationOutcome {
  Status status = Status::kFixpoint;
  std::vector<Removal> removals;
  int passes = 0;  // sweep rebuilds

  bool failed() const { return status == Status::kFailed; }
};

// Feasibility: min counter over admissible strings <= max dom(N).
bool FeasibleAtMost(const SweepTable& table, const DomainStore& store);
// Feasibility: max counter over admissible strings >= min dom(N).
bool FeasibleAtLeast(const SweepTable& table, const DomainStore& store);

// Minimum (maximum) counter over admissible strings with x_i = symbol.
// `i` is 1-based. Returns kUnreachable when no such string exists. Only
// pre_min/suf_min (pre_max/suf_max) need to be populated.
Counter MinCost(int i, SymbolId symbol, const SweepTable& table,
                const CounterDfa& dfa);
Counter MaxCost(int i, SymbolId symbol, const SweepTable& table,
                const CounterDfa& dfa);

// Each propagator mutates `store`; the returned removals are the entries it
// appended to the store's log.
PropagationOutcome PropagateAtMost(const CounterDfa& dfa, DomainStore& store);
PropagationOutcome PropagateAtLeast(const CounterDfa& dfa, DomainStore& store);
PropagationOutcome PropagateExact(const CounterDfa& dfa, DomainStore& store);
PropagationOutcome PropagateDecomposed(const CounterDfa& dfa,
                                       DomainStore& store);
PropagationOutcome Propagate(Mode mode, const CounterDfa& dfa,
                             DomainStore& store);

}  // namespace regcount

#endif  // REGCOUNT_PROPAGATORS_H_
