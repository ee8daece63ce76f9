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

#ifndef REGCOUNT_AUTOMATON_H_
#define REGCOUNT_AUTOMATON_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace regcount {

using StateId = std::int32_t;
using SymbolId = std::int32_t;
using Counter = std::uint64_t;

// Reserved counter value; never a legal counter. Sweeps use it to mark
// states no admissible string reaches.
inline constexpr Counter kUnreachable = ~Counter{0};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedAutomaton : public Error {
 public:
  using Error::Error;
};

class UnknownAutomaton : public Error {
 public:
  using Error::Error;
};

class CounterOverflow : public Error {
 public:
  using Error::Error;
};

// Addition over counters; throws CounterOverflow instead of wrapping, and
// refuses to produce kUnreachable.
Counter CheckedAdd(Counter a, Counter b);

// Sentinel-propagating sum used by the sweeps: kUnreachable absorbs.
inline Counter SaturatingSum(Counter a, Counter b) {
  if (a == kUnreachable || b == kUnreachable) return kUnreachable;
  return CheckedAdd(a, b);
}

// Unvalidated, loosely typed description of a counter automaton, as read
// from a file or assembled by hand. Increments are signed so that negative
// input can be reported rather than silently converted.
struct AutomatonDescription {
  struct Transition {
    std::int64_t from = 0;
    std::string symbol;
    std::int64_t to = 0;
    std::int64_t inc = 0;
  };

  std::string name;
  std::int64_t num_states = 0;
  std::vector<std::string> alphabet;
  std::int64_t start = 0;
  std::optional<std::vector<std::int64_t>> accepting;  // unset: all states
  std::vector<Transition> transitions;
  std::vector<std::string> state_names;  // optional, empty or num_states
};

// Returns a description of the first violated invariant, or nullopt when
// the description denotes a valid total counter-DFA.
std::optional<std::string> Validate(const AutomatonDescription& description);

struct RunResult {
  StateId end_state = 0;
  Counter counter = 0;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

// A deterministic finite automaton with total transition function over
// Q x Sigma -> Q x N. All states accept for counting purposes; the
// accepting flags only feed LiftAccepting. Immutable once built.
class CounterDfa {
 public:
  // Throws MalformedAutomaton with the locus of the first violation.
  static CounterDfa FromDescription(const AutomatonDescription& description);

  AutomatonDescription ToDescription() const;

  int num_states() const { return num_states_; }
  int alphabet_size() const { return static_cast<int>(alphabet_.size()); }
  StateId start() const { return start_; }
  const std::string& name() const { return name_; }

  StateId Next(StateId state, SymbolId symbol) const {
    return next_[Cell(state, symbol)];
  }
  Counter Increment(StateId state, SymbolId symbol) const {
    return increment_[Cell(state, symbol)];
  }
  bool accepting(StateId state) const { return accepting_[state] != 0; }

  const std::string& symbol_name(SymbolId symbol) const {
    return alphabet_[symbol];
  }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  std::optional<SymbolId> FindSymbol(std::string_view name) const;

  // Falls back to the decimal state index when no names were given.
  std::string state_name(StateId state) const;
  std::optional<StateId> FindState(std::string_view name) const;

 private:
  CounterDfa() = default;
  std::size_t Cell(StateId state, SymbolId symbol) const {
    return static_cast<std::size_t>(state) * alphabet_.size() +
           static_cast<std::size_t>(symbol);
  }

  std::string name_;
  int num_states_ = 0;
  StateId start_ = 0;
  std::vector<std::string> alphabet_;
  std::vector<std::string> state_names_;
  std::vector<StateId> next_;        // num_states x |alphabet|
  std::vector<Counter> increment_;   // num_states x |alphabet|
  std::vector<char> accepting_;
};

// Runs the automaton on a ground word from the start state.
RunResult Run(const CounterDfa& dfa, std::span<const SymbolId> word);

// Runs from an arbitrary state; the returned counter is the path cost only.
RunResult RunFrom(const CounterDfa& dfa, StateId from,
                  std::span<const SymbolId> word);

// Parses whitespace-separated symbol names. Throws Error on unknown names.
std::vector<SymbolId> ParseWord(const CounterDfa& dfa, std::string_view text);

// One-state automaton over {a_1, ..., a_k, 0}: symbol a_i adds a_i to the
// counter, symbol "0" adds nothing. Symbols are named by their decimal
// value; repeated values share one symbol. Throws Error on empty input or a
// zero value.
CounterDfa BuildSubsetSumDfa(std::span<const Counter> values);

// End-of-string lifting. Adds a fresh absorbing state and a fresh symbol
// "$". Reading "$" from an accepting state costs 0, from a non-accepting
// state costs `penalty`. The new state self-loops on every symbol at cost 0.
// All states of the result accept.
CounterDfa LiftAccepting(const CounterDfa& dfa, Counter penalty);

inline constexpr std::string_view kEndOfString = "$";

}  // namespace regcount

#endif  // REGCOUNT_AUTOMATON_H_
