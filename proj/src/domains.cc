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

#include "regcount/domains.h"

#include <algorithm>
#include <utility>

namespace regcount {

SymbolDomain SymbolDomain::Empty(int alphabet_size) {
  SymbolDomain d;
  d.alphabet_size_ = alphabet_size;
  d.words_.assign((alphabet_size + 63) / 64, 0);
  return d;
}

SymbolDomain SymbolDomain::Full(int alphabet_size) {
  SymbolDomain d = Empty(alphabet_size);
  for (SymbolId l = 0; l < alphabet_size; ++l) d.Insert(l);
  return d;
}

SymbolDomain SymbolDomain::Of(int alphabet_size,
                              std::span<const SymbolId> symbols) {
  SymbolDomain d = Empty(alphabet_size);
  for (SymbolId l : symbols) {
    if (l < 0 || l >= alphabet_size) {
      throw Error("symbol " + std::to_string(l) + " out of range");
    }
    d.Insert(l);
  }
  return d;
}

bool SymbolDomain::Erase(SymbolId symbol) {
  if (!Contains(symbol)) return false;
  words_[symbol / 64] &= ~(std::uint64_t{1} << (symbol % 64));
  --size_;
  return true;
}

bool SymbolDomain::Insert(SymbolId symbol) {
  if (Contains(symbol)) return false;
  words_[symbol / 64] |= std::uint64_t{1} << (symbol % 64);
  ++size_;
  return true;
}

std::vector<SymbolId> SymbolDomain::Values() const {
  std::vector<SymbolId> values;
  values.reserve(size_);
  ForEach([&](SymbolId l) { values.push_back(l); });
  return values;
}

CounterDomain::CounterDomain(std::vector<Counter> values)
    : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (!values_.empty() && values_.back() == kUnreachable) {
    throw Error("counter value out of range");
  }
}

CounterDomain CounterDomain::Interval(Counter lo, Counter hi) {
  std::vector<Counter> values;
  for (Counter v = lo; v <= hi; ++v) values.push_back(v);
  return CounterDomain(std::move(values));
}

bool CounterDomain::Contains(Counter value) const {
  return std::binary_search(values_.begin(), values_.end(), value);
}

bool CounterDomain::Intersects(Counter lo, Counter hi) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), lo);
  return it != values_.end() && *it <= hi;
}

bool CounterDomain::Erase(Counter value) {
  auto it = std::lower_bound(values_.begin(), values_.end(), value);
  if (it == values_.end() || *it != value) return false;
  values_.erase(it);
  return true;
}

Counter CounterDomain::min() const {
  if (values_.empty()) throw EmptyDomain("counter domain is empty");
  return values_.front();
}

Counter CounterDomain::max() const {
  if (values_.empty()) throw EmptyDomain("counter domain is empty");
  return values_.back();
}

DomainStore::DomainStore(std::vector<SymbolDomain> vars, CounterDomain counter)
    : vars_(std::move(vars)), counter_(std::move(counter)) {}

RemoveResult DomainStore::Remove(int var, Counter value) {
  bool changed;
  bool empty;
  if (var == kCounterVar) {
    changed = counter_.Erase(value);
    empty = counter_.empty();
  } else {
    SymbolDomain& d = vars_.at(var);
    changed = value < static_cast<Counter>(d.alphabet_size()) &&
              d.Erase(static_cast<SymbolId>(value));
    empty = d.empty();
  }
  if (!changed) return RemoveResult::kUnchanged;
  log_.push_back({var, value});
  return empty ? RemoveResult::kEmptied : RemoveResult::kChanged;
}

void DomainStore::Apply(const Removal& removal) {
  if (removal.var == kCounterVar) {
    counter_.Erase(removal.value);
  } else {
    vars_.at(removal.var).Erase(static_cast<SymbolId>(removal.value));
  }
}

bool DomainStore::AnyEmpty() const {
  return counter_.empty() ||
         std::any_of(vars_.begin(), vars_.end(),
                     [](const SymbolDomain& d) { return d.empty(); });
}

bool DomainStore::AllFixed() const {
  return counter_.size() == 1 &&
         std::all_of(vars_.begin(), vars_.end(),
                     [](const SymbolDomain& d) { return d.size() == 1; });
}

std::size_t DomainStore::TotalSize() const {
  std::size_t total = counter_.size();
  for (const SymbolDomain& d : vars_) total += d.size();
  return total;
}

}  // namespace regcount
