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

#ifndef REGCOUNT_INSTANCE_H_
#define REGCOUNT_INSTANCE_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>

#include "json.hpp"
#include "regcount/automaton.h"
#include "regcount/domains.h"
#include "regcount/propagators.h"
#include "regcount/signature.h"

namespace regcount {

// Malformed input files: bad JSON, wrong field types, unknown symbols.
class ParseError : public Error {
 public:
  using Error::Error;
};

struct SignatureBlock {
  SignatureMap map;
  NativeStore natives;
};

// A counting constraint instance: sequence domains, counter domain,
// automaton and mode. With a signature block, `store` holds the projection
// of the native domains onto the alphabet.
struct Instance {
  CounterDfa dfa;
  DomainStore store;
  Mode mode = Mode::kExact;
  std::optional<SignatureBlock> signature;
};

// Subset-sum reduction: one variable per value with domain {0, a_i} and
// dom(N) = {target}. Satisfiable under kExact iff some subset sums to
// `target`.
Instance BuildSubsetSumInstance(std::span<const Counter> values,
                                Counter target);

// Automaton file:
//   {"name": "...", "states": 3, "alphabet": ["a", "b"], "start": 0,
//    "accepting": [0, 1],            // optional, default all
//    "state_names": ["eps", ...],    // optional
//    "transitions": [{"from": 0, "symbol": "a", "to": 1, "inc": 0}, ...]}
nlohmann::json AutomatonToJson(const CounterDfa& dfa);
// Throws ParseError on structural problems, MalformedAutomaton when the
// description fails validation.
AutomatonDescription DescriptionFromJson(const nlohmann::json& j);
CounterDfa AutomatonFromJson(const nlohmann::json& j);

// Instance file:
//   {"automaton": {...} | "path/relative/to/instance.json" | "catalog:B",
//    "vars": [["a", "b"], ["a"]],    // symbol names per position
//    "counter": [0, 1, 2],
//    "mode": "atmost" | "atleast" | "exact",
//    "signature": {...}}             // optional, see below
// With a signature the "vars" entries are native integers and the
// signature is either {"among": {"set": [2, 5]}} or
// {"maps": [{"1": "notin", "2": "in"}, ...]} with one map per position.
nlohmann::json InstanceToJson(const Instance& instance);
Instance InstanceFromJson(const nlohmann::json& j,
                          const std::filesystem::path& base_dir = {});

nlohmann::json ReadJsonFile(const std::filesystem::path& path);
CounterDfa LoadAutomatonFile(const std::filesystem::path& path);
Instance LoadInstanceFile(const std::filesystem::path& path);
void WriteJsonFile(const std::filesystem::path& path, const nlohmann::json& j);

// Parses "1,3,5" or "2-4" (or a mix, "0,2-3") into counter values.
CounterDomain ParseCounterList(std::string_view text);

}  // namespace regcount

#endif  // REGCOUNT_INSTANCE_H_
