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

#include "regcount/generator.h"

#include <algorithm>
#include <string>
#include <utility>

#include "regcount/catalog.h"

namespace regcount {
namespace {

std::uint64_t Mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Contiguous run of ids or a random subset (possibly with holes), each
// with probability 1/2. Never empty.
std::vector<std::int64_t> RandomSubset(int universe, SplitMix64& rng) {
  std::vector<std::int64_t> picked;
  if (rng.Bernoulli(0.5)) {
    int a = rng.UniformInt(0, universe - 1);
    int b = rng.UniformInt(0, universe - 1);
    if (a > b) std::swap(a, b);
    for (int v = a; v <= b; ++v) picked.push_back(v);
    return picked;
  }
  while (picked.empty()) {
    for (int v = 0; v < universe; ++v) {
      if (rng.Bernoulli(0.5)) picked.push_back(v);
    }
  }
  return picked;
}

CounterShape DrawShape(const GenConfig& cfg, SplitMix64& rng) {
  return cfg.counter_shapes[rng.Uniform(0, cfg.counter_shapes.size() - 1)];
}

}  // namespace

SplitMix64 SplitMix64::Stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(Mix(seed + 0x9e3779b97f4a7c15ULL * (index + 1)) ^
                    Mix(seed));
}

std::uint64_t SplitMix64::Next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return Mix(state_);
}

std::uint64_t SplitMix64::Uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == max()) return Next();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = max() - max() % range;
  std::uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return lo + x % range;
}

bool SplitMix64::Bernoulli(double p) {
  // 53 random mantissa bits.
  return static_cast<double>(Next() >> 11) * 0x1.0p-53 < p;
}

std::string_view CounterShapeName(CounterShape shape) {
  switch (shape) {
    case CounterShape::kSingle:
      return "single";
    case CounterShape::kPair:
      return "pair";
    case CounterShape::kInterval2:
      return "interval2";
    case CounterShape::kInterval3:
      return "interval3";
  }
  return "?";
}

void GenConfig::Validate() const {
  if (min_states < 1 || max_states < min_states) {
    throw Error("bad state-count range");
  }
  if (min_alphabet < 1 || max_alphabet < min_alphabet || max_alphabet > 26) {
    throw Error("bad alphabet-size range");
  }
  if (!(increment_probability >= 0.0 && increment_probability <= 1.0)) {
    throw Error("increment probability must lie in [0, 1]");
  }
  if (min_length < 0 || max_length < min_length) {
    throw Error("bad sequence-length range");
  }
  if (counter_shapes.empty()) throw Error("no counter-domain shapes");
}

CounterDfa RandomCdfa(const GenConfig& cfg, SplitMix64& rng) {
  cfg.Validate();
  AutomatonDescription d;
  d.name = "random";
  d.num_states = rng.UniformInt(cfg.min_states, cfg.max_states);
  const int sigma = rng.UniformInt(cfg.min_alphabet, cfg.max_alphabet);
  for (int l = 0; l < sigma; ++l) {
    d.alphabet.push_back(std::string(1, static_cast<char>('a' + l)));
  }
  for (std::int64_t q = 0; q < d.num_states; ++q) {
    for (const std::string& symbol : d.alphabet) {
      const auto to = static_cast<std::int64_t>(
          rng.Uniform(0, static_cast<std::uint64_t>(d.num_states - 1)));
      const bool counts = rng.Bernoulli(cfg.increment_probability);
      d.transitions.push_back(
          {q, symbol, to,
           counts ? static_cast<std::int64_t>(cfg.increment_value) : 0});
    }
  }
  return CounterDfa::FromDescription(d);
}

CounterDomain RandomCounterDomain(CounterShape shape, int n,
                                  SplitMix64& rng) {
  const Counter base = rng.Uniform(0, static_cast<std::uint64_t>(n));
  switch (shape) {
    case CounterShape::kSingle:
      return CounterDomain{base};
    case CounterShape::kPair: {
      if (n == 0) return CounterDomain{base, base + 1};
      Counter other = rng.Uniform(0, static_cast<std::uint64_t>(n - 1));
      if (other >= base) ++other;
      return CounterDomain{base, other};
    }
    case CounterShape::kInterval2:
      return CounterDomain::Interval(base, base + 1);
    case CounterShape::kInterval3:
      return CounterDomain::Interval(base, base + 2);
  }
  return CounterDomain{base};
}

Instance RandomInstance(const GenConfig& cfg, const CounterDfa& dfa,
                        SplitMix64& rng, Mode mode, CounterShape* shape) {
  cfg.Validate();
  const int n = rng.UniformInt(cfg.min_length, cfg.max_length);
  std::vector<SymbolDomain> vars;
  vars.reserve(n);
  for (int i = 0; i < n; ++i) {
    SymbolDomain d = SymbolDomain::Empty(dfa.alphabet_size());
    for (std::int64_t l : RandomSubset(dfa.alphabet_size(), rng)) {
      d.Insert(static_cast<SymbolId>(l));
    }
    vars.push_back(std::move(d));
  }
  const CounterShape drawn = DrawShape(cfg, rng);
  if (shape != nullptr) *shape = drawn;
  DomainStore store(std::move(vars), RandomCounterDomain(drawn, n, rng));
  return {dfa, std::move(store), mode, std::nullopt};
}

Instance CorpusInstance(const GenConfig& cfg, std::uint64_t seed,
                        std::uint64_t index, Mode mode) {
  SplitMix64 rng = SplitMix64::Stream(seed, index);
  const CounterDfa dfa = RandomCdfa(cfg, rng);
  return RandomInstance(cfg, dfa, rng, mode);
}

Instance FamilyInstance(const GenConfig& cfg, const CounterDfa& dfa,
                        std::uint64_t seed, std::uint64_t index, Mode mode) {
  SplitMix64 rng = SplitMix64::Stream(seed, index);
  return RandomInstance(cfg, dfa, rng, mode);
}

Instance RandomAmongInstance(const GenConfig& cfg, SplitMix64& rng, Mode mode,
                             int universe_size) {
  cfg.Validate();
  const CounterDfa dfa = Catalog("AMONG");
  const int n = rng.UniformInt(cfg.min_length, cfg.max_length);
  NativeStore natives;
  for (int i = 0; i < n; ++i) {
    natives.vars.push_back(MakeNativeDomain(RandomSubset(universe_size, rng)));
  }
  std::vector<NativeValue> set;
  for (NativeValue v = 0; v < universe_size; ++v) {
    if (rng.Bernoulli(0.5)) set.push_back(v);
  }
  natives.counter = RandomCounterDomain(DrawShape(cfg, rng), n, rng);
  SignatureMap map = SignatureMap::Among(dfa, set, natives.vars);
  std::vector<SymbolDomain> vars;
  for (int i = 0; i < n; ++i) vars.push_back(Project(map, natives.vars[i], i));
  DomainStore store(std::move(vars), natives.counter);
  return {dfa, std::move(store), mode,
          SignatureBlock{std::move(map), std::move(natives)}};
}

}  // namespace regcount
