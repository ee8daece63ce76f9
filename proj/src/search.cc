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

#include "regcount/search.h"

#include <chrono>

namespace regcount {
namespace {

class Searcher {
 public:
  Searcher(const CounterDfa& dfa, Mode mode, const SearchOptions& options)
      : dfa_(dfa), mode_(mode), options_(options) {}

  void Visit(DomainStore store) {
    ++stats_.nodes;
    store.ClearLog();
    const PropagationOutcome outcome = Propagate(mode_, dfa_, store);
    if (outcome.failed()) {
      ++stats_.failures;
      return;
    }
    stats_.prunings += outcome.removals.size();
    if (store.AllFixed()) {
      RecordLeaf(store);
      return;
    }
    for (int i = 0; i < store.num_vars(); ++i) {
      if (store.var(i).size() > 1) {
        for (SymbolId l : store.var(i).Values()) {
          DomainStore child = store;
          for (SymbolId other : store.var(i).Values()) {
            if (other != l) child.RemoveSymbol(i, other);
          }
          Visit(std::move(child));
        }
        return;
      }
    }
    for (Counter v : store.counter().values()) {
      DomainStore child = store;
      for (Counter other : store.counter().values()) {
        if (other != v) child.RemoveCounterValue(other);
      }
      Visit(std::move(child));
    }
  }

  SearchStats Take() { return std::move(stats_); }

 private:
  void RecordLeaf(const DomainStore& store) {
    Solution solution;
    for (const SymbolDomain& d : store.vars()) {
      solution.word.push_back(d.Values().front());
    }
    solution.n = store.min_counter();
    // Every propagator here decides ground instances exactly; the explicit
    // check keeps a wrong propagator from inflating the solution count.
    if (!Satisfies(RelationOf(mode_), Run(dfa_, solution.word).counter,
                   solution.n)) {
      ++stats_.failures;
      return;
    }
    ++stats_.solutions;
    if (options_.collect_solutions) {
      stats_.solution_list.push_back(std::move(solution));
    }
  }

  const CounterDfa& dfa_;
  Mode mode_;
  const SearchOptions& options_;
  SearchStats stats_;
};

}  // namespace

SearchStats Solve(const CounterDfa& dfa, const DomainStore& store,
                  Mode propagator, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Searcher searcher(dfa, propagator, options);
  searcher.Visit(store);
  SearchStats stats = searcher.Take();
  stats.wall_seconds = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return stats;
}

}  // namespace regcount
