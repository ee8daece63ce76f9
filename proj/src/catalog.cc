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

#include "regcount/catalog.h"

namespace regcount {
namespace {

AutomatonDescription Aab() {
  AutomatonDescription d;
  d.name = "AAB";
  d.num_states = 3;
  d.state_names = {"eps", "a", "aa"};
  d.alphabet = {"a", "b"};
  d.transitions = {
      {0, "a", 1, 0}, {0, "b", 0, 0},  //
      {1, "a", 2, 0}, {1, "b", 0, 0},  //
      {2, "a", 2, 0}, {2, "b", 0, 1},
  };
  return d;
}

AutomatonDescription Among() {
  AutomatonDescription d;
  d.name = "AMONG";
  d.num_states = 1;
  d.state_names = {"i"};
  d.alphabet = {"in", "notin"};
  d.transitions = {{0, "in", 0, 1}, {0, "notin", 0, 0}};
  return d;
}

AutomatonDescription Rst() {
  enum : int { kEps, kR, kRr, kRrt, kRrs, kRrtr };
  AutomatonDescription d;
  d.name = "RST";
  d.num_states = 6;
  d.state_names = {"eps", "r", "rr", "rrt", "rrs", "rrtr"};
  d.alphabet = {"r", "s", "t"};
  d.transitions = {
      {kEps, "r", kR, 1},     {kEps, "s", kEps, 0},  {kEps, "t", kEps, 0},
      {kR, "r", kRr, 0},      {kR, "s", kEps, 0},    {kR, "t", kEps, 0},
      {kRr, "r", kRr, 0},     {kRr, "s", kRrs, 0},   {kRr, "t", kRrt, 0},
      {kRrt, "r", kRrtr, 2},  {kRrt, "s", kRrs, 0},  {kRrt, "t", kRrt, 0},
      {kRrs, "r", kRrtr, 2},  {kRrs, "s", kEps, 0},  {kRrs, "t", kEps, 0},
      {kRrtr, "r", kRr, 0},   {kRrtr, "s", kR, 0},   {kRrtr, "t", kRrtr, 0},
  };
  return d;
}

AutomatonDescription B() {
  AutomatonDescription d;
  d.name = "B";
  d.num_states = 2;
  d.state_names = {"eps", "q"};
  d.alphabet = {"1", "2"};
  d.transitions = {
      {0, "1", 1, 0}, {0, "2", 1, 0},  //
      {1, "1", 0, 0}, {1, "2", 1, 1},
  };
  return d;
}

}  // namespace

CounterDfa Catalog(std::string_view name) {
  if (name == "AAB") return CounterDfa::FromDescription(Aab());
  if (name == "AMONG") return CounterDfa::FromDescription(Among());
  if (name == "RST") return CounterDfa::FromDescription(Rst());
  if (name == "B") return CounterDfa::FromDescription(B());
  throw UnknownAutomaton("unknown automaton '" + std::string(name) + "'");
}

std::vector<std::string> CatalogNames() { return {"AAB", "AMONG", "RST", "B"}; }

}  // namespace regcount
