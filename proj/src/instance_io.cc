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

#include "regcount/instance.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "regcount/catalog.h"

namespace regcount {

using nlohmann::json;

namespace {

template <typename T>
T Get(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

Counter ParseCounterToken(std::string_view token) {
  Counter value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("bad counter value '" + std::string(token) + "'");
  }
  return value;
}

CounterDomain CounterFromJson(const json& j) {
  if (!j.is_array()) throw ParseError("'counter' must be an array");
  std::vector<Counter> values;
  for (const json& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      throw ParseError("counter values must be nonnegative integers");
    }
    values.push_back(v.get<Counter>());
  }
  return CounterDomain(std::move(values));
}

SignatureBlock SignatureFromJson(const json& j, const CounterDfa& dfa,
                                 const json& vars) {
  NativeStore natives;
  for (const json& position : vars) {
    if (!position.is_array()) throw ParseError("'vars' entries must be arrays");
    std::vector<NativeValue> values;
    for (const json& v : position) {
      if (!v.is_number_integer()) {
        throw ParseError("native values must be integers");
      }
      values.push_back(v.get<NativeValue>());
    }
    natives.vars.push_back(MakeNativeDomain(std::move(values)));
  }
  if (j.contains("among")) {
    const auto set = Get<std::vector<NativeValue>>(j.at("among"), "set");
    return {SignatureMap::Among(dfa, set, natives.vars), std::move(natives)};
  }
  if (j.contains("maps")) {
    const json& maps = j.at("maps");
    if (!maps.is_array() || maps.size() != natives.vars.size()) {
      throw ParseError("'signature.maps' needs one object per position");
    }
    std::vector<std::map<NativeValue, SymbolId>> tables;
    for (const json& m : maps) {
      if (!m.is_object()) throw ParseError("signature maps must be objects");
      std::map<NativeValue, SymbolId> table;
      for (const auto& [key, value] : m.items()) {
        if (!value.is_string()) {
          throw ParseError("signature targets must be symbol names");
        }
        const auto symbol = dfa.FindSymbol(value.get<std::string>());
        if (!symbol) {
          throw ParseError("signature maps to unknown symbol " + value.dump());
        }
        NativeValue native = 0;
        auto [ptr, ec] =
            std::from_chars(key.data(), key.data() + key.size(), native);
        if (ec != std::errc() || ptr != key.data() + key.size()) {
          throw ParseError("signature key '" + key + "' is not an integer");
        }
        table[native] = *symbol;
      }
      const std::size_t i = tables.size();
      for (NativeValue v : natives.vars[i]) {
        if (!table.count(v)) {
          throw ParseError("value " + std::to_string(v) +
                           " has no signature at position " +
                           std::to_string(i + 1));
        }
      }
      tables.push_back(std::move(table));
    }
    return {SignatureMap(dfa.alphabet_size(), std::move(tables)),
            std::move(natives)};
  }
  throw ParseError("'signature' needs 'among' or 'maps'");
}

}  // namespace

Instance BuildSubsetSumInstance(std::span<const Counter> values,
                                Counter target) {
  CounterDfa dfa = BuildSubsetSumDfa(values);
  const SymbolId zero = *dfa.FindSymbol("0");
  std::vector<SymbolDomain> vars;
  for (Counter v : values) {
    const SymbolId a = *dfa.FindSymbol(std::to_string(v));
    vars.push_back(SymbolDomain::Of(dfa.alphabet_size(), {a, zero}));
  }
  DomainStore store(std::move(vars), CounterDomain{target});
  return {std::move(dfa), std::move(store), Mode::kExact, std::nullopt};
}

json AutomatonToJson(const CounterDfa& dfa) {
  const AutomatonDescription d = dfa.ToDescription();
  json j;
  if (!d.name.empty()) j["name"] = d.name;
  j["states"] = d.num_states;
  j["alphabet"] = d.alphabet;
  j["start"] = d.start;
  if (d.accepting) j["accepting"] = *d.accepting;
  if (!d.state_names.empty()) j["state_names"] = d.state_names;
  json transitions = json::array();
  for (const auto& t : d.transitions) {
    transitions.push_back(
        {{"from", t.from}, {"symbol", t.symbol}, {"to", t.to}, {"inc", t.inc}});
  }
  j["transitions"] = std::move(transitions);
  return j;
}

AutomatonDescription DescriptionFromJson(const json& j) {
  if (!j.is_object()) throw ParseError("automaton must be a JSON object");
  AutomatonDescription d;
  if (j.contains("name")) d.name = Get<std::string>(j, "name");
  d.num_states = Get<std::int64_t>(j, "states");
  d.alphabet = Get<std::vector<std::string>>(j, "alphabet");
  d.start = j.contains("start") ? Get<std::int64_t>(j, "start") : 0;
  if (j.contains("accepting")) {
    d.accepting = Get<std::vector<std::int64_t>>(j, "accepting");
  }
  if (j.contains("state_names")) {
    d.state_names = Get<std::vector<std::string>>(j, "state_names");
  }
  const json& transitions = j.contains("transitions") ? j.at("transitions")
                                                      : json::array();
  if (!transitions.is_array()) throw ParseError("'transitions' must be an array");
  for (const json& t : transitions) {
    if (!t.is_object()) throw ParseError("transition must be an object");
    d.transitions.push_back({Get<std::int64_t>(t, "from"),
                             Get<std::string>(t, "symbol"),
                             Get<std::int64_t>(t, "to"),
                             Get<std::int64_t>(t, "inc")});
  }
  return d;
}

CounterDfa AutomatonFromJson(const json& j) {
  return CounterDfa::FromDescription(DescriptionFromJson(j));
}

json InstanceToJson(const Instance& instance) {
  const CounterDfa& dfa = instance.dfa;
  json j;
  j["automaton"] = AutomatonToJson(dfa);
  json vars = json::array();
  if (instance.signature) {
    for (const NativeDomain& d : instance.signature->natives.vars) {
      vars.push_back(d);
    }
    json maps = json::array();
    for (int i = 0; i < instance.signature->map.num_positions(); ++i) {
      json m = json::object();
      for (const auto& [value, symbol] : instance.signature->map.table(i)) {
        m[std::to_string(value)] = dfa.symbol_name(symbol);
      }
      maps.push_back(std::move(m));
    }
    j["signature"] = {{"maps", std::move(maps)}};
  } else {
    for (const SymbolDomain& d : instance.store.vars()) {
      json names = json::array();
      d.ForEach([&](SymbolId l) { names.push_back(dfa.symbol_name(l)); });
      vars.push_back(std::move(names));
    }
  }
  j["vars"] = std::move(vars);
  j["counter"] = instance.store.counter().values();
  j["mode"] = std::string(ModeName(instance.mode));
  return j;
}

Instance InstanceFromJson(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  if (!j.contains("automaton")) throw ParseError("missing field 'automaton'");
  const json& a = j.at("automaton");
  std::optional<CounterDfa> dfa;
  if (a.is_string()) {
    const std::string ref = a.get<std::string>();
    if (ref.rfind("catalog:", 0) == 0) {
      dfa = Catalog(ref.substr(8));
    } else {
      dfa = LoadAutomatonFile(base_dir / ref);
    }
  } else {
    dfa = AutomatonFromJson(a);
  }

  Mode mode = Mode::kExact;
  if (j.contains("mode")) {
    const auto parsed = ParseMode(Get<std::string>(j, "mode"));
    if (!parsed) throw ParseError("unknown mode " + j.at("mode").dump());
    mode = *parsed;
  }
  if (!j.contains("vars") || !j.at("vars").is_array()) {
    throw ParseError("'vars' must be an array");
  }
  if (!j.contains("counter")) throw ParseError("missing field 'counter'");
  CounterDomain counter = CounterFromJson(j.at("counter"));

  if (j.contains("signature")) {
    SignatureBlock block = SignatureFromJson(j.at("signature"), *dfa, j.at("vars"));
    block.natives.counter = counter;
    std::vector<SymbolDomain> vars;
    for (int i = 0; i < static_cast<int>(block.natives.vars.size()); ++i) {
      vars.push_back(Project(block.map, block.natives.vars[i], i));
    }
    DomainStore store(std::move(vars), std::move(counter));
    return {std::move(*dfa), std::move(store), mode, std::move(block)};
  }

  std::vector<SymbolDomain> vars;
  for (const json& position : j.at("vars")) {
    if (!position.is_array()) throw ParseError("'vars' entries must be arrays");
    SymbolDomain d = SymbolDomain::Empty(dfa->alphabet_size());
    for (const json& name : position) {
      if (!name.is_string()) {
        throw ParseError("symbol names must be strings, got " + name.dump());
      }
      const auto symbol = dfa->FindSymbol(name.get<std::string>());
      if (!symbol) throw ParseError("unknown symbol " + name.dump());
      d.Insert(*symbol);
    }
    vars.push_back(std::move(d));
  }
  DomainStore store(std::move(vars), std::move(counter));
  return {std::move(*dfa), std::move(store), mode, std::nullopt};
}

json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

CounterDfa LoadAutomatonFile(const std::filesystem::path& path) {
  return AutomatonFromJson(ReadJsonFile(path));
}

Instance LoadInstanceFile(const std::filesystem::path& path) {
  return InstanceFromJson(ReadJsonFile(path), path.parent_path());
}

void WriteJsonFile(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

CounterDomain ParseCounterList(std::string_view text) {
  std::vector<Counter> values;
  std::istringstream in{std::string(text)};
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    const auto dash = token.find('-');
    if (dash == std::string::npos) {
      values.push_back(ParseCounterToken(token));
      continue;
    }
    const Counter lo = ParseCounterToken(std::string_view(token).substr(0, dash));
    const Counter hi = ParseCounterToken(std::string_view(token).substr(dash + 1));
    if (hi < lo || hi - lo > 1'000'000) {
      throw ParseError("bad counter range '" + token + "'");
    }
    for (Counter v = lo; v <= hi; ++v) values.push_back(v);
  }
  return CounterDomain(std::move(values));
}

}  // namespace regcount
