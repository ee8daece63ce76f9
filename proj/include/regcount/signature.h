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

#ifndef REGCOUNT_SIGNATURE_H_
#define REGCOUNT_SIGNATURE_H_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "regcount/automaton.h"
#include "regcount/domains.h"
#include "regcount/propagators.h"

namespace regcount {

using NativeValue = std::int64_t;

// Sorted, duplicate-free native values of one sequence position.
using NativeDomain = std::vector<NativeValue>;

NativeDomain MakeNativeDomain(std::vector<NativeValue> values);

// Per-position total function from a declared native universe onto the
// automaton alphabet (unary signature constraints).
class SignatureMap {
 public:
  SignatureMap() = default;
  SignatureMap(int alphabet_size,
               std::vector<std::map<NativeValue, SymbolId>> tables);

  // x_i in `set` maps to symbol "in", anything else to "notin". The tables
  // cover exactly the given universes. Throws Error when the automaton
  // lacks either symbol.
  static SignatureMap Among(const CounterDfa& dfa,
                            std::span<const NativeValue> set,
                            std::span<const NativeDomain> universes);

  int num_positions() const { return static_cast<int>(tables_.size()); }
  int alphabet_size() const { return alphabet_size_; }
  // Throws Error for values outside the declared universe of position i.
  SymbolId Map(int i, NativeValue value) const;
  const std::map<NativeValue, SymbolId>& table(int i) const {
    return tables_[i];
  }

 private:
  int alphabet_size_ = 0;
  std::vector<std::map<NativeValue, SymbolId>> tables_;
};

// Symbols with at least one preimage in `native`.
SymbolDomain Project(const SignatureMap& sig, const NativeDomain& native,
                     int i);

struct ChannelResult {
  std::vector<NativeValue> removed;
  bool emptied = false;
};

// Drops from `native` exactly the values whose image is in `pruned`.
ChannelResult ChannelBack(const SignatureMap& sig, NativeDomain& native,
                          const SymbolDomain& pruned, int i);

struct NativeStore {
  std::vector<NativeDomain> vars;
  CounterDomain counter;
};

struct NativeRemoval {
  int var = 0;  // kCounterVar for N
  NativeValue value = 0;

  friend auto operator<=>(const NativeRemoval&, const NativeRemoval&) =
      default;
};

struct CompositeOutcome {
  Status status = Status::kFixpoint;
  std::vector<NativeRemoval> removals;
  int rounds = 0;

  bool failed() const { return status == Status::kFailed; }
};

// Fixpoint of {propagator on the projected symbol store, channeling of
// symbol prunings back to native values}.
CompositeOutcome PropagateWithSignature(Mode mode, const CounterDfa& dfa,
                                        const SignatureMap& sig,
                                        NativeStore& store);

}  // namespace regcount

#endif  // REGCOUNT_SIGNATURE_H_
