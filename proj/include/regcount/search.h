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

#ifndef REGCOUNT_SEARCH_H_
#define REGCOUNT_SEARCH_H_

#include <compare>
#include <cstdint>
#include <vector>

#include "regcount/automaton.h"
#include "regcount/domains.h"
#include "regcount/propagators.h"

namespace regcount {

struct Solution {
  std::vector<SymbolId> word;
  Counter n = 0;

  friend auto operator<=>(const Solution&, const Solution&) = default;
};

struct SearchOptions {
  bool collect_solutions = false;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t failures = 0;   // nodes whose propagation failed
  std::uint64_t prunings = 0;   // removals by non-failed propagations
  std::uint64_t solutions = 0;
  double wall_seconds = 0.0;
  std::vector<Solution> solution_list;  // only with collect_solutions
};

// Depth-first propagate-and-branch. Branches on the leftmost unfixed
// variable (x_1..x_n, then N) over its values in ascending order, running
// `propagator` to its fixpoint at every node. The semantics enforced are
// those of the propagator's mode; kDecomposedExact enforces equality.
SearchStats Solve(const CounterDfa& dfa, const DomainStore& store,
                  Mode propagator, const SearchOptions& options = {});

}  // namespace regcount

#endif  // REGCOUNT_SEARCH_H_
