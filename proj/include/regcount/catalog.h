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

#ifndef REGCOUNT_CATALOG_H_
#define REGCOUNT_CATALOG_H_

#include <string>
#include <string_view>
#include <vector>

#include "regcount/automaton.h"

namespace regcount {

// Named example automata:
//   AAB    occurrences of the word "aab" over {a, b}
//   AMONG  one state over the signature symbols {in, notin}; "in" counts
//   RST    six states over {r, s, t} with increments of 1 and 2
//   B      two states over {1, 2}; only the self-loop on 2 counts
// Throws UnknownAutomaton for any other name.
CounterDfa Catalog(std::string_view name);

std::vector<std::string> CatalogNames();

}  // namespace regcount

#endif  // REGCOUNT_CATALOG_H_
