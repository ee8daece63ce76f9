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

#ifndef REGCOUNT_DOMAINS_H_
#define REGCOUNT_DOMAINS_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "regcount/automaton.h"

namespace regcount {

class EmptyDomain : public Error {
 public:
  using Error::Error;
};

// Subset of an automaton alphabet, stored as a bitset.
class SymbolDomain {
 public:
  SymbolDomain() = default;
  // Full domain over an alphabet of `alphabet_size` symbols.
  static SymbolDomain Full(int alphabet_size);
  static SymbolDomain Empty(int alphabet_size);
  static SymbolDomain Of(int alphabet_size, std::span<const SymbolId> symbols);
  static SymbolDomain Of(int alphabet_size,
                         std::initializer_list<SymbolId> symbols) {
    return Of(alphabet_size, std::span(symbols.begin(), symbols.size()));
  }

  int alphabet_size() const { return alphabet_size_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool Contains(SymbolId symbol) const {
    return (words_[symbol / 64] >> (symbol % 64)) & 1;
  }
  // Returns true iff the symbol was present.
  bool Erase(SymbolId symbol);
  bool Insert(SymbolId symbol);

  // Symbols in ascending id order.
  std::vector<SymbolId> Values() const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(static_cast<SymbolId>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const SymbolDomain&, const SymbolDomain&) = default;

 private:
  int alphabet_size_ = 0;
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Sorted, duplicate-free set of counter values. Holes are allowed.
class CounterDomain {
 public:
  CounterDomain() = default;
  explicit CounterDomain(std::vector<Counter> values);
  CounterDomain(std::initializer_list<Counter> values)
      : CounterDomain(std::vector<Counter>(values)) {}
  static CounterDomain Interval(Counter lo, Counter hi);

  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }
  bool Contains(Counter value) const;
  // True iff some value lies in [lo, hi].
  bool Intersects(Counter lo, Counter hi) const;
  bool Erase(Counter value);
  // Throws EmptyDomain.
  Counter min() const;
  Counter max() const;
  const std::vector<Counter>& values() const { return values_; }

  friend bool operator==(const CounterDomain&, const CounterDomain&) = default;

 private:
  std::vector<Counter> values_;
};

// Variable reference: sequence positions are 0-based internally; the counter
// variable N is kCounterVar.
inline constexpr int kCounterVar = -1;

struct Removal {
  int var = 0;
  Counter value = 0;  // a SymbolId for sequence variables

  friend bool operator==(const Removal&, const Removal&) = default;
  friend auto operator<=>(const Removal&, const Removal&) = default;
};

enum class RemoveResult { kUnchanged, kChanged, kEmptied };

// Domains of x_1..x_n and N, plus the log of every removal performed.
// No trailing: search copies whole stores.
class DomainStore {
 public:
  DomainStore() = default;
  DomainStore(std::vector<SymbolDomain> vars, CounterDomain counter);

  int num_vars() const { return static_cast<int>(vars_.size()); }
  const SymbolDomain& var(int i) const { return vars_[i]; }
  const std::vector<SymbolDomain>& vars() const { return vars_; }
  const CounterDomain& counter() const { return counter_; }
  const std::vector<Removal>& log() const { return log_; }

  RemoveResult Remove(int var, Counter value);
  RemoveResult RemoveSymbol(int i, SymbolId symbol) { return Remove(i, symbol); }
  RemoveResult RemoveCounterValue(Counter value) {
    return Remove(kCounterVar, value);
  }
  // Applies a logged removal without re-logging it.
  void Apply(const Removal& removal);

  bool AnyEmpty() const;
  bool AllFixed() const;
  // Number of values across all domains, N included.
  std::size_t TotalSize() const;

  Counter min_counter() const { return counter_.min(); }
  Counter max_counter() const { return counter_.max(); }

  void ClearLog() { log_.clear(); }

  // Domains only; the log is ignored.
  bool SameDomains(const DomainStore& other) const {
    return vars_ == other.vars_ && counter_ == other.counter_;
  }

 private:
  std::vector<SymbolDomain> vars_;
  CounterDomain counter_;
  std::vector<Removal> log_;
};

}  // namespace regcount

#endif  // REGCOUNT_DOMAINS_H_
