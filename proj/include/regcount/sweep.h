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

#ifndef REGCOUNT_SWEEP_H_
#define REGCOUNT_SWEEP_H_

#include <cstddef>
#include <span>
#include <vector>

#include "regcount/automaton.h"
#include "regcount/domains.h"

namespace regcount {

enum class Extremum { kMin, kMax };

// Consecutive rows of per-state counter values, stored flat. Row indices
// start at first_row(): 0 for prefix rows, 1 for suffix rows. Entries equal
// to kUnreachable mark states without an admissible string.
class SweepRows {
 public:
  SweepRows() = default;
  SweepRows(int first_row, int num_rows, int num_states)
      : first_row_(first_row),
        num_rows_(num_rows),
        num_states_(num_states),
        cells_(static_cast<std::size_t>(num_rows) * num_states, kUnreachable) {
  }

  int first_row() const { return first_row_; }
  int last_row() const { return first_row_ + num_rows_ - 1; }
  int num_states() const { return num_states_; }

  std::span<const Counter> row(int i) const {
    return {cells_.data() + Offset(i), static_cast<std::size_t>(num_states_)};
  }
  std::span<Counter> mutable_row(int i) {
    return {cells_.data() + Offset(i), static_cast<std::size_t>(num_states_)};
  }
  Counter at(int i, StateId q) const { return cells_[Offset(i) + q]; }

  std::size_t bytes() const { return cells_.size() * sizeof(Counter); }

 private:
  std::size_t Offset(int i) const {
    return static_cast<std::size_t>(i - first_row_) * num_states_;
  }

  int first_row_ = 0;
  int num_rows_ = 0;
  int num_states_ = 0;
  std::vector<Counter> cells_;
};

// Prefix rows 0..n. Row i holds, per state q, the minimum (or maximum)
// counter over strings s_1..s_i with s_j in dom(x_j) that reach q from the
// start state. Requires every sequence domain to be nonempty.
SweepRows Forward(const CounterDfa& dfa, const DomainStore& store,
                  Extremum extremum);

// Suffix rows 1..n+1. Row n+1 is 0 on exactly the states reachable in
// `forward_last` (prefix row n) and unreachable elsewhere. Row i holds, per
// state q, the minimum (or maximum) counter increase over admissible
// suffixes s_i..s_n leading from q to such a state.
SweepRows Backward(const CounterDfa& dfa, const DomainStore& store,
                   std::span<const Counter> forward_last, Extremum extremum);

struct SweepTable {
  SweepRows pre_min;
  SweepRows pre_max;
  SweepRows suf_min;
  SweepRows suf_max;

  int num_vars() const { return pre_min.last_row(); }
};

SweepTable ComputeSweeps(const CounterDfa& dfa, const DomainStore& store);

// Min (max) over reachable states of prefix row n.
Counter GlobalMin(const SweepRows& pre_min);
Counter GlobalMax(const SweepRows& pre_max);
inline Counter GlobalMin(const SweepTable& t) { return GlobalMin(t.pre_min); }
inline Counter GlobalMax(const SweepTable& t) { return GlobalMax(t.pre_max); }

}  // namespace regcount

#endif  // REGCOUNT_SWEEP_H_
