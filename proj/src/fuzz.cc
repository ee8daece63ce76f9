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

#include <omp.h>

#include <algorithm>
#include <sstream>

namespace regcount {
namespace {

std::string RemovalList(const std::vector<Removal>& removals) {
  std::ostringstream out;
  for (std::size_t k = 0; k < removals.size(); ++k) {
    if (k > 0) out << ' ';
    if (removals[k].var == kCounterVar) {
      out << "N=" << removals[k].value;
    } else {
      out << 'x' << removals[k].var + 1 << '=' << removals[k].value;
    }
  }
  return out.str();
}

// True iff `stronger` kept a subset of what `weaker` kept. A failed run
// keeps nothing.
bool RemovesSuperset(const DomainStore& stronger, bool stronger_failed,
                     const DomainStore& weaker, bool weaker_failed) {
  if (stronger_failed) return true;
  if (weaker_failed) return false;
  for (int i = 0; i < stronger.num_vars(); ++i) {
    bool ok = true;
    stronger.var(i).ForEach([&](SymbolId l) {
      ok = ok && weaker.var(i).Contains(l);
    });
    if (!ok) return false;
  }
  return std::all_of(stronger.counter().values().begin(),
                     stronger.counter().values().end(),
                     [&](Counter v) { return weaker.counter().Contains(v); });
}

struct Item {
  std::vector<FuzzViolation> violations;
  std::vector<ModeTally> tallies;
};

Item RunOne(const FuzzOptions& options, std::uint64_t index) {
  Item item;
  item.tallies.resize(options.modes.size());
  const Instance instance =
      CorpusInstance(options.config, options.seed, index, Mode::kExact);
  for (std::size_t m = 0; m < options.modes.size(); ++m) {
    CheckInstance(instance, options.modes[m], index, options.cap,
                  item.violations, item.tallies[m]);
  }
  return item;
}

FuzzReport Merge(const FuzzOptions& options, std::vector<Item>& items) {
  FuzzReport report;
  report.instances = items.size();
  for (Mode mode : options.modes) report.tallies.push_back({mode, {}});
  for (Item& item : items) {
    for (FuzzViolation& v : item.violations) {
      report.violations.push_back(std::move(v));
    }
    for (std::size_t m = 0; m < item.tallies.size(); ++m) {
      ModeTally& total = report.tallies[m].second;
      total.runs += item.tallies[m].runs;
      total.failures += item.tallies[m].failures;
      total.removals += item.tallies[m].removals;
      total.gaps += item.tallies[m].gaps;
    }
  }
  return report;
}

}  // namespace

void CheckInstance(const Instance& instance, Mode mode, std::uint64_t index,
                   std::uint64_t cap, std::vector<FuzzViolation>& violations,
                   ModeTally& tally) {
  const CounterDfa& dfa = instance.dfa;
  const DomainStore& before = instance.store;
  const SupportReport support = Enumerate(dfa, before, RelationOf(mode), cap);

  DomainStore after = before;
  const PropagationOutcome outcome = Propagate(mode, dfa, after);
  ++tally.runs;
  tally.failures += outcome.failed() ? 1 : 0;
  tally.removals += outcome.removals.size();

  const DcVerdict verdict =
      CompareWithSupport(support, before, after, outcome.failed());
  tally.gaps += verdict.gaps.size();
  if (!verdict.unsound.empty()) {
    violations.push_back(
        {index, mode, "unsound", RemovalList(verdict.unsound)});
  }

  if (mode == Mode::kAtMost || mode == Mode::kAtLeast) {
    if (!verdict.gaps.empty()) {
      violations.push_back({index, mode, "dc-gap", RemovalList(verdict.gaps)});
    }
    if (!outcome.failed()) {
      DomainStore again = after;
      const PropagationOutcome second = Propagate(mode, dfa, again);
      if (second.failed() || !second.removals.empty()) {
        violations.push_back({index, mode, "not-idempotent",
                              RemovalList(second.removals)});
      }
    }
  }

  if (mode == Mode::kExact) {
    DomainStore decomposed = before;
    const PropagationOutcome baseline =
        PropagateDecomposed(dfa, decomposed);
    if (!RemovesSuperset(after, outcome.failed(), decomposed,
                         baseline.failed())) {
      violations.push_back({index, mode, "not-stronger",
                            "exact: " + RemovalList(outcome.removals) +
                                " / decomposed: " +
                                RemovalList(baseline.removals)});
    }
  }
}

FuzzReport RunFuzzSerial(const FuzzOptions& options) {
  options.config.Validate();
  std::vector<Item> items;
  items.reserve(options.count);
  for (std::uint64_t k = 0; k < options.count; ++k) {
    items.push_back(RunOne(options, k));
  }
  return Merge(options, items);
}

FuzzReport RunFuzz(const FuzzOptions& options) {
  if (options.threads <= 1) return RunFuzzSerial(options);
  options.config.Validate();
  std::vector<Item> items(options.count);
  const auto count = static_cast<std::int64_t>(options.count);
  // Exceptions must not escape the parallel region; the first one is
  // rethrown afterwards.
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16) num_threads(options.threads)
  for (std::int64_t k = 0; k < count; ++k) {
    try {
      items[k] = RunOne(options, static_cast<std::uint64_t>(k));
    } catch (...) {
#pragma omp critical(regcount_fuzz_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return Merge(options, items);
}

std::string DescribeViolation(const FuzzViolation& v) {
  std::ostringstream out;
  out << "instance " << v.index << " [" << ModeName(v.mode) << "] " << v.kind
      << ": " << v.detail;
  return out.str();
}

}  // namespace regcount
