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
#include <limits>
#include <set>
#include <utility>

namespace regcount {
namespace {

std::uint64_t SaturatingProduct(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

// Number of N values standing in `relation` to `counter`.
std::uint64_t CountPartners(const CounterDomain& dom, Relation relation,
                            Counter counter) {
  const auto& v = dom.values();
  switch (relation) {
    case Relation::kLessEqual:  // counter <= N
      return static_cast<std::uint64_t>(
          v.end() - std::lower_bound(v.begin(), v.end(), counter));
    case Relation::kGreaterEqual:  // counter >= N
      return static_cast<std::uint64_t>(
          std::upper_bound(v.begin(), v.end(), counter) - v.begin());
    case Relation::kEqual:
      return dom.Contains(counter) ? 1 : 0;
  }
  return 0;
}

CounterDomain SupportedCounterValues(const CounterDomain& dom,
                                     Relation relation,
                                     const std::set<Counter>& achieved) {
  std::vector<Counter> supported;
  for (Counter v : dom.values()) {
    const bool ok = std::any_of(achieved.begin(), achieved.end(),
                                [&](Counter c) {
                                  return Satisfies(relation, c, v);
                                });
    if (ok) supported.push_back(v);
  }
  return CounterDomain(std::move(supported));
}

class SymbolEnumerator {
 public:
  SymbolEnumerator(const CounterDfa& dfa, const DomainStore& store,
                   Relation relation)
      : dfa_(dfa), store_(store), relation_(relation) {
    domains_.reserve(store.num_vars());
    for (const SymbolDomain& d : store.vars()) domains_.push_back(d.Values());
    word_.resize(store.num_vars());
    for (const SymbolDomain& d : store.vars()) {
      report_.supported.push_back(SymbolDomain::Empty(d.alphabet_size()));
    }
  }

  SupportReport Run() {
    if (!store_.counter().empty() &&
        std::none_of(domains_.begin(), domains_.end(),
                     [](const auto& d) { return d.empty(); })) {
      Visit(0, dfa_.start(), 0);
    }
    report_.supported_counter =
        SupportedCounterValues(store_.counter(), relation_, achieved_);
    report_.satisfiable = report_.solution_count > 0;
    if (!report_.satisfiable) {
      for (SymbolDomain& d : report_.supported) {
        d = SymbolDomain::Empty(d.alphabet_size());
      }
    }
    return std::move(report_);
  }

 private:
  void Visit(int i, StateId state, Counter counter) {
    if (i == static_cast<int>(word_.size())) {
      const std::uint64_t partners =
          CountPartners(store_.counter(), relation_, counter);
      if (partners == 0) return;
      report_.solution_count += partners;
      achieved_.insert(counter);
      for (int j = 0; j < i; ++j) report_.supported[j].Insert(word_[j]);
      return;
    }
    for (SymbolId l : domains_[i]) {
      word_[i] = l;
      Visit(i + 1, dfa_.Next(state, l),
            CheckedAdd(counter, dfa_.Increment(state, l)));
    }
  }

  const CounterDfa& dfa_;
  const DomainStore& store_;
  Relation relation_;
  std::vector<std::vector<SymbolId>> domains_;
  std::vector<SymbolId> word_;
  std::set<Counter> achieved_;
  SupportReport report_;
};

}  // namespace

std::uint64_t CountGroundSequences(const DomainStore& store) {
  std::uint64_t total = 1;
  for (const SymbolDomain& d : store.vars()) {
    total = SaturatingProduct(total, static_cast<std::uint64_t>(d.size()));
  }
  return total;
}

SupportReport Enumerate(const CounterDfa& dfa, const DomainStore& store,
                        Relation relation, std::uint64_t cap) {
  const std::uint64_t ground = CountGroundSequences(store);
  if (ground > cap) {
    throw CapExceeded("instance has " + std::to_string(ground) +
                      " ground sequences, cap is " + std::to_string(cap));
  }
  return SymbolEnumerator(dfa, store, relation).Run();
}

DcVerdict CompareWithSupport(const SupportReport& support,
                             const DomainStore& before,
                             const DomainStore& after, bool failed) {
  DcVerdict verdict;
  for (int i = 0; i < before.num_vars(); ++i) {
    before.var(i).ForEach([&](SymbolId l) {
      const bool kept = !failed && after.var(i).Contains(l);
      const bool supported = support.supported[i].Contains(l);
      if (supported && !kept) verdict.unsound.push_back({i, Counter(l)});
      if (!supported && kept) verdict.gaps.push_back({i, Counter(l)});
    });
  }
  for (Counter v : before.counter().values()) {
    const bool kept = !failed && after.counter().Contains(v);
    const bool supported = support.supported_counter.Contains(v);
    if (supported && !kept) verdict.unsound.push_back({kCounterVar, v});
    if (!supported && kept) verdict.gaps.push_back({kCounterVar, v});
  }
  return verdict;
}

DcVerdict CheckDc(const CounterDfa& dfa, const DomainStore& before,
                  const DomainStore& after, const PropagationOutcome& outcome,
                  Mode mode, std::uint64_t cap) {
  const SupportReport support = Enumerate(dfa, before, RelationOf(mode), cap);
  return CompareWithSupport(support, before, after, outcome.failed());
}

NativeSupportReport EnumerateNative(const CounterDfa& dfa,
                                    const SignatureMap& sig,
                                    const NativeStore& store,
                                    Relation relation, std::uint64_t cap) {
  const int n = static_cast<int>(store.vars.size());
  std::uint64_t ground = 1;
  for (const NativeDomain& d : store.vars) {
    ground = SaturatingProduct(ground, d.size());
  }
  if (ground > cap) {
    throw CapExceeded("instance has " + std::to_string(ground) +
                      " native assignments, cap is " + std::to_string(cap));
  }
  NativeSupportReport report;
  std::vector<std::set<NativeValue>> supported(n);
  std::set<Counter> achieved;
  if (ground > 0 && !store.counter.empty()) {
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      StateId state = dfa.start();
      Counter counter = 0;
      for (int i = 0; i < n; ++i) {
        const SymbolId l = sig.Map(i, store.vars[i][pick[i]]);
        counter = CheckedAdd(counter, dfa.Increment(state, l));
        state = dfa.Next(state, l);
      }
      const std::uint64_t partners =
          CountPartners(store.counter, relation, counter);
      if (partners > 0) {
        report.solution_count += partners;
        achieved.insert(counter);
        for (int i = 0; i < n; ++i) supported[i].insert(store.vars[i][pick[i]]);
      }
      // Odometer increment, last position fastest.
      int i = n - 1;
      while (i >= 0 && ++pick[i] == store.vars[i].size()) pick[i--] = 0;
      if (i < 0) break;
    }
  }
  for (const auto& s : supported) report.supported.emplace_back(s.begin(), s.end());
  report.supported_counter =
      SupportedCounterValues(store.counter, relation, achieved);
  report.satisfiable = report.solution_count > 0;
  return report;
}

}  // namespace regcount
