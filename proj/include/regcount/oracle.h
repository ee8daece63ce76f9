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

#ifndef REGCOUNT_ORACLE_H_
#define REGCOUNT_ORACLE_H_

#include <cstdint>
#include <vector>

#include "regcount/automaton.h"
#include "regcount/domains.h"
#include "regcount/propagators.h"
#include "regcount/signature.h"

namespace regcount {

// Brute-force reference. Shares no code with the sweeps: it runs the
// automaton on every admissible ground sequence.

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

class CapExceeded : public Error {
 public:
  using Error::Error;
};

struct SupportReport {
  std::vector<SymbolDomain> supported;  // per position
  CounterDomain supported_counter;
  // Number of (sequence, N value) pairs satisfying the relation.
  std::uint64_t solution_count = 0;
  bool satisfiable = false;
};

// Throws CapExceeded when the number of ground sequences exceeds `cap`.
SupportReport Enumerate(const CounterDfa& dfa, const DomainStore& store,
                        Relation relation, std::uint64_t cap = kDefaultCap);

// Sequence domain sizes multiplied, saturating at UINT64_MAX.
std::uint64_t CountGroundSequences(const DomainStore& store);

struct DcVerdict {
  std::vector<Removal> unsound;  // removed although supported
  std::vector<Removal> gaps;     // kept although unsupported

  bool clean() const { return unsound.empty() && gaps.empty(); }
};

// Compares a propagation result against the supports of the store it
// started from. A failed propagation counts as removing every value.
DcVerdict CompareWithSupport(const SupportReport& support,
                             const DomainStore& before,
                             const DomainStore& after, bool failed);

// For kAtMost and kAtLeast both lists must come back empty; for the exact
// modes only `unsound` must.
DcVerdict CheckDc(const CounterDfa& dfa, const DomainStore& before,
                  const DomainStore& after, const PropagationOutcome& outcome,
                  Mode mode, std::uint64_t cap = kDefaultCap);

struct NativeSupportReport {
  std::vector<NativeDomain> supported;
  CounterDomain supported_counter;
  std::uint64_t solution_count = 0;
  bool satisfiable = false;
};

// Enumerates native assignments, mapping each through the signature.
NativeSupportReport EnumerateNative(const CounterDfa& dfa,
                                    const SignatureMap& sig,
                                    const NativeStore& store,
                                    Relation relation,
                                    std::uint64_t cap = kDefaultCap);

}  // namespace regcount

#endif  // REGCOUNT_ORACLE_H_
