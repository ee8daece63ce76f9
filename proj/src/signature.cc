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

#include "regcount/signature.h"

#include <algorithm>
#include <utility>

namespace regcount {

NativeDomain MakeNativeDomain(std::vector<NativeValue> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

SignatureMap::SignatureMap(int alphabet_size,
                           std::vector<std::map<NativeValue, SymbolId>> tables)
    : alphabet_size_(alphabet_size), tables_(std::move(tables)) {
  for (const auto& table : tables_) {
    for (const auto& [value, symbol] : table) {
      if (symbol < 0 || symbol >= alphabet_size_) {
        throw Error("signature maps value " + std::to_string(value) +
                    " outside the alphabet");
      }
    }
  }
}

SignatureMap SignatureMap::Among(const CounterDfa& dfa,
                                 std::span<const NativeValue> set,
                                 std::span<const NativeDomain> universes) {
  const auto in = dfa.FindSymbol("in");
  const auto notin = dfa.FindSymbol("notin");
  if (!in || !notin) {
    throw Error("among signature needs symbols 'in' and 'notin'");
  }
  std::vector<std::map<NativeValue, SymbolId>> tables(universes.size());
  for (std::size_t i = 0; i < universes.size(); ++i) {
    for (NativeValue v : universes[i]) {
      const bool member = std::find(set.begin(), set.end(), v) != set.end();
      tables[i][v] = member ? *in : *notin;
    }
  }
  return SignatureMap(dfa.alphabet_size(), std::move(tables));
}

SymbolId SignatureMap::Map(int i, NativeValue value) const {
  const auto& table = tables_.at(i);
  auto it = table.find(value);
  if (it == table.end()) {
    throw Error("value " + std::to_string(value) +
                " has no signature at position " + std::to_string(i + 1));
  }
  return it->second;
}

SymbolDomain Project(const SignatureMap& sig, const NativeDomain& native,
                     int i) {
  SymbolDomain symbols = SymbolDomain::Empty(sig.alphabet_size());
  for (NativeValue v : native) symbols.Insert(sig.Map(i, v));
  return symbols;
}

ChannelResult ChannelBack(const SignatureMap& sig, NativeDomain& native,
                          const SymbolDomain& pruned, int i) {
  ChannelResult result;
  if (pruned.empty()) return result;
  NativeDomain kept;
  for (NativeValue v : native) {
    if (pruned.Contains(sig.Map(i, v))) {
      result.removed.push_back(v);
    } else {
      kept.push_back(v);
    }
  }
  native = std::move(kept);
  result.emptied = native.empty();
  return result;
}

CompositeOutcome PropagateWithSignature(Mode mode, const CounterDfa& dfa,
                                        const SignatureMap& sig,
                                        NativeStore& store) {
  CompositeOutcome outcome;
  const int n = static_cast<int>(store.vars.size());
  if (sig.num_positions() < n) {
    throw Error("signature covers fewer positions than the sequence");
  }
  while (true) {
    ++outcome.rounds;
    std::vector<SymbolDomain> projected;
    projected.reserve(n);
    for (int i = 0; i < n; ++i) projected.push_back(Project(sig, store.vars[i], i));
    DomainStore symbolic(projected, store.counter);
    const PropagationOutcome inner = Propagate(mode, dfa, symbolic);

    bool changed = false;
    for (const Removal& r : inner.removals) {
      if (r.var == kCounterVar) {
        store.counter.Erase(r.value);
        outcome.removals.push_back({kCounterVar,
                                    static_cast<NativeValue>(r.value)});
        changed = true;
        continue;
      }
      const SymbolDomain pruned = SymbolDomain::Of(
          sig.alphabet_size(), {static_cast<SymbolId>(r.value)});
      ChannelResult channel = ChannelBack(sig, store.vars[r.var], pruned, r.var);
      for (NativeValue v : channel.removed) {
        outcome.removals.push_back({r.var, v});
        changed = true;
      }
    }
    if (inner.failed()) {
      outcome.status = Status::kFailed;
      return outcome;
    }
    if (!changed) return outcome;
  }
}

}  // namespace regcount
