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

#include "regcount/automaton.h"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace regcount {

Counter CheckedAdd(Counter a, Counter b) {
  // kUnreachable is reserved, so the largest legal counter is one below it.
  if (a >= kUnreachable - b) {
    throw CounterOverflow("counter overflow: " + std::to_string(a) + " + " +
                          std::to_string(b));
  }
  return a + b;
}

std::optional<std::string> Validate(const AutomatonDescription& d) {
  if (d.num_states <= 0) return "automaton must have at least one state";
  if (d.num_states > std::numeric_limits<StateId>::max()) {
    return "too many states";
  }
  if (d.alphabet.empty()) return "alphabet must be nonempty";
  std::map<std::string, SymbolId> symbols;
  for (std::size_t i = 0; i < d.alphabet.size(); ++i) {
    if (d.alphabet[i].empty()) {
      return "alphabet symbol " + std::to_string(i) + " has an empty name";
    }
    if (!symbols.emplace(d.alphabet[i], static_cast<SymbolId>(i)).second) {
      return "duplicate alphabet symbol '" + d.alphabet[i] + "'";
    }
  }
  if (d.start < 0 || d.start >= d.num_states) {
    return "start state " + std::to_string(d.start) + " out of range";
  }
  if (d.accepting) {
    for (std::int64_t q : *d.accepting) {
      if (q < 0 || q >= d.num_states) {
        return "accepting state " + std::to_string(q) + " out of range";
      }
    }
  }
  if (!d.state_names.empty()) {
    if (static_cast<std::int64_t>(d.state_names.size()) != d.num_states) {
      return "state_names has " + std::to_string(d.state_names.size()) +
             " entries, expected " + std::to_string(d.num_states);
    }
    std::set<std::string> seen;
    for (const std::string& name : d.state_names) {
      if (name.empty()) return "empty state name";
      if (!seen.insert(name).second) {
        return "duplicate state name '" + name + "'";
      }
    }
  }
  const std::size_t cells =
      static_cast<std::size_t>(d.num_states) * d.alphabet.size();
  std::vector<char> filled(cells, 0);
  for (const auto& t : d.transitions) {
    const std::string locus = "transition (" + std::to_string(t.from) + ", '" +
                              t.symbol + "')";
    if (t.from < 0 || t.from >= d.num_states) {
      return locus + ": source state out of range";
    }
    auto it = symbols.find(t.symbol);
    if (it == symbols.end()) return locus + ": symbol not in alphabet";
    if (t.to < 0 || t.to >= d.num_states) {
      return locus + ": target state " + std::to_string(t.to) +
             " out of range";
    }
    if (t.inc < 0) {
      return locus + ": negative increment " + std::to_string(t.inc);
    }
    const std::size_t cell =
        static_cast<std::size_t>(t.from) * d.alphabet.size() + it->second;
    if (filled[cell]) return locus + ": duplicate transition";
    filled[cell] = 1;
  }
  for (std::size_t cell = 0; cell < cells; ++cell) {
    if (!filled[cell]) {
      const std::size_t q = cell / d.alphabet.size();
      const std::size_t l = cell % d.alphabet.size();
      return "missing transition (" + std::to_string(q) + ", '" +
             d.alphabet[l] + "')";
    }
  }
  return std::nullopt;
}

CounterDfa CounterDfa::FromDescription(const AutomatonDescription& d) {
  if (auto error = Validate(d)) throw MalformedAutomaton(*error);
  CounterDfa dfa;
  dfa.name_ = d.name;
  dfa.num_states_ = static_cast<int>(d.num_states);
  dfa.start_ = static_cast<StateId>(d.start);
  dfa.alphabet_ = d.alphabet;
  dfa.state_names_ = d.state_names;
  const std::size_t cells =
      static_cast<std::size_t>(d.num_states) * d.alphabet.size();
  dfa.next_.assign(cells, 0);
  dfa.increment_.assign(cells, 0);
  for (const auto& t : d.transitions) {
    const SymbolId symbol = *dfa.FindSymbol(t.symbol);
    const std::size_t cell = dfa.Cell(static_cast<StateId>(t.from), symbol);
    dfa.next_[cell] = static_cast<StateId>(t.to);
    dfa.increment_[cell] = static_cast<Counter>(t.inc);
    if (dfa.increment_[cell] == kUnreachable) {
      throw MalformedAutomaton("increment too large");
    }
  }
  if (d.accepting) {
    dfa.accepting_.assign(dfa.num_states_, 0);
    for (std::int64_t q : *d.accepting) dfa.accepting_[q] = 1;
  } else {
    dfa.accepting_.assign(dfa.num_states_, 1);
  }
  return dfa;
}

AutomatonDescription CounterDfa::ToDescription() const {
  AutomatonDescription d;
  d.name = name_;
  d.num_states = num_states_;
  d.alphabet = alphabet_;
  d.start = start_;
  d.state_names = state_names_;
  if (std::find(accepting_.begin(), accepting_.end(), 0) != accepting_.end()) {
    std::vector<std::int64_t> accepting;
    for (StateId q = 0; q < num_states_; ++q) {
      if (accepting_[q]) accepting.push_back(q);
    }
    d.accepting = std::move(accepting);
  }
  for (StateId q = 0; q < num_states_; ++q) {
    for (SymbolId l = 0; l < alphabet_size(); ++l) {
      d.transitions.push_back({q, alphabet_[l], Next(q, l),
                               static_cast<std::int64_t>(Increment(q, l))});
    }
  }
  return d;
}

std::optional<SymbolId> CounterDfa::FindSymbol(std::string_view name) const {
  for (SymbolId l = 0; l < alphabet_size(); ++l) {
    if (alphabet_[l] == name) return l;
  }
  return std::nullopt;
}

std::string CounterDfa::state_name(StateId state) const {
  if (state_names_.empty()) return std::to_string(state);
  return state_names_[state];
}

std::optional<StateId> CounterDfa::FindState(std::string_view name) const {
  for (StateId q = 0; q < num_states_; ++q) {
    if (state_name(q) == name) return q;
  }
  return std::nullopt;
}

RunResult RunFrom(const CounterDfa& dfa, StateId from,
                  std::span<const SymbolId> word) {
  RunResult result{from, 0};
  for (SymbolId symbol : word) {
    result.counter =
        CheckedAdd(result.counter, dfa.Increment(result.end_state, symbol));
    result.end_state = dfa.Next(result.end_state, symbol);
  }
  return result;
}

RunResult Run(const CounterDfa& dfa, std::span<const SymbolId> word) {
  return RunFrom(dfa, dfa.start(), word);
}

std::vector<SymbolId> ParseWord(const CounterDfa& dfa, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<SymbolId> word;
  std::string token;
  while (in >> token) {
    auto symbol = dfa.FindSymbol(token);
    if (!symbol) throw Error("unknown symbol '" + token + "'");
    word.push_back(*symbol);
  }
  return word;
}

CounterDfa BuildSubsetSumDfa(std::span<const Counter> values) {
  if (values.empty()) throw Error("subset-sum reduction needs values");
  AutomatonDescription d;
  d.name = "SUBSET_SUM";
  d.num_states = 1;
  d.state_names = {"q"};
  std::vector<Counter> distinct;
  for (Counter v : values) {
    if (v == 0) throw Error("subset-sum values must be positive");
    if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) {
      distinct.push_back(v);
    }
  }
  for (Counter v : distinct) {
    d.alphabet.push_back(std::to_string(v));
    d.transitions.push_back(
        {0, d.alphabet.back(), 0, static_cast<std::int64_t>(v)});
  }
  d.alphabet.push_back("0");
  d.transitions.push_back({0, "0", 0, 0});
  return CounterDfa::FromDescription(d);
}

CounterDfa LiftAccepting(const CounterDfa& dfa, Counter penalty) {
  if (dfa.FindSymbol(kEndOfString)) {
    throw Error("automaton already uses the end-of-string symbol");
  }
  AutomatonDescription d = dfa.ToDescription();
  const std::int64_t end_state = d.num_states;
  d.num_states += 1;
  d.accepting.reset();
  if (!d.state_names.empty()) {
    std::string name = "end";
    while (dfa.FindState(name)) name += "'";
    d.state_names.push_back(name);
  }
  const std::string dollar(kEndOfString);
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    const Counter inc = dfa.accepting(q) ? 0 : penalty;
    d.transitions.push_back(
        {q, dollar, end_state, static_cast<std::int64_t>(inc)});
  }
  for (const std::string& symbol : dfa.alphabet()) {
    d.transitions.push_back({end_state, symbol, end_state, 0});
  }
  d.transitions.push_back({end_state, dollar, end_state, 0});
  d.alphabet.push_back(dollar);
  if (!d.name.empty()) d.name += "$";
  return CounterDfa::FromDescription(d);
}

}  // namespace regcount
