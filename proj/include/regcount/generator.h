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

#ifndef REGCOUNT_GENERATOR_H_
#define REGCOUNT_GENERATOR_H_

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "regcount/automaton.h"
#include "regcount/instance.h"
#include "regcount/propagators.h"

namespace regcount {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed algorithm so that corpora
// are identical across platforms and standard libraries. Satisfies
// UniformRandomBitGenerator, but the helpers below avoid std::
// distributions, whose output is implementation defined.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  // Independent stream for item `index` of the corpus rooted at `seed`.
  static SplitMix64 Stream(std::uint64_t seed, std::uint64_t index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return Next(); }

  std::uint64_t Next();
  SplitMix64 Split() { return SplitMix64(Next()); }

  // Uniform on [lo, hi]; unbiased (rejection).
  std::uint64_t Uniform(std::uint64_t lo, std::uint64_t hi);
  int UniformInt(int lo, int hi) {
    return static_cast<int>(Uniform(static_cast<std::uint64_t>(lo),
                                    static_cast<std::uint64_t>(hi)));
  }
  bool Bernoulli(double p);

 private:
  std::uint64_t state_;
};

// Counter-domain shapes: one value, two values, interval of length 2,
// interval of length 3.
enum class CounterShape { kSingle, kPair, kInterval2, kInterval3 };
inline constexpr int kNumCounterShapes = 4;
std::string_view CounterShapeName(CounterShape shape);

struct GenConfig {
  int min_states = 1;
  int max_states = 5;
  int min_alphabet = 2;
  int max_alphabet = 4;
  double increment_probability = 0.2;
  Counter increment_value = 1;
  int min_length = 1;
  int max_length = 10;
  std::vector<CounterShape> counter_shapes = {
      CounterShape::kSingle, CounterShape::kPair, CounterShape::kInterval2,
      CounterShape::kInterval3};
  std::uint64_t seed = 0;

  // Throws Error on empty ranges or probabilities outside [0, 1].
  void Validate() const;
};

// Uniform total transition table; each arc independently carries
// `increment_value` with `increment_probability`. Start state 0; symbols
// named a, b, c, ...
CounterDfa RandomCdfa(const GenConfig& cfg, SplitMix64& rng);

// Random sequence length, per-position symbol domains (contiguous interval
// or a set that may have holes) and a counter domain anchored at a base
// uniform in [0, n]. The drawn shape is reported through `shape` if given.
Instance RandomInstance(const GenConfig& cfg, const CounterDfa& dfa,
                        SplitMix64& rng, Mode mode = Mode::kExact,
                        CounterShape* shape = nullptr);

CounterDomain RandomCounterDomain(CounterShape shape, int n, SplitMix64& rng);

// Item `index` of the corpus rooted at `seed`: random automaton plus random
// instance, both drawn from Stream(seed, index).
Instance CorpusInstance(const GenConfig& cfg, std::uint64_t seed,
                        std::uint64_t index, Mode mode = Mode::kExact);

// Among-style instance over the AMONG automaton: native domains drawn from
// the universe {0, ..., universe_size - 1}, a random value set V, and the
// in/notin signature.
Instance RandomAmongInstance(const GenConfig& cfg, SplitMix64& rng, Mode mode,
                             int universe_size = 6);

// Random instance over a fixed automaton (used for catalog families).
Instance FamilyInstance(const GenConfig& cfg, const CounterDfa& dfa,
                        std::uint64_t seed, std::uint64_t index, Mode mode);

}  // namespace regcount

#endif  // REGCOUNT_GENERATOR_H_
