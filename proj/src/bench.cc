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

#include "regcount/bench.h"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>
#include <vector>

#include "regcount/catalog.h"

namespace regcount {
namespace {

struct Measurement {
  double seconds[2] = {0.0, 0.0};
  bool failed[2] = {false, false};
  std::uint64_t removals[2] = {0, 0};
};

Measurement MeasureOne(const Instance& instance, const BenchOptions& options) {
  Measurement m;
  const Mode modes[2] = {options.first, options.second};
  for (int k = 0; k < 2; ++k) {
    DomainStore store = instance.store;
    const auto start = std::chrono::steady_clock::now();
    const PropagationOutcome outcome = Propagate(modes[k], instance.dfa, store);
    m.seconds[k] = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    m.failed[k] = outcome.failed();
    m.removals[k] = outcome.removals.size();
  }
  return m;
}

}  // namespace

BenchReport Bench(std::span<const CorpusEntry> corpus,
                  const BenchOptions& options) {
  std::vector<Measurement> measured(corpus.size());
  const auto count = static_cast<std::int64_t>(corpus.size());
  if (options.threads <= 1) {
    for (std::int64_t k = 0; k < count; ++k) {
      measured[k] = MeasureOne(corpus[k].instance, options);
    }
  } else {
#pragma omp parallel for schedule(dynamic, 16) num_threads(options.threads)
    for (std::int64_t k = 0; k < count; ++k) {
      measured[k] = MeasureOne(corpus[k].instance, options);
    }
  }

  BenchReport report;
  report.modes[0] = options.first;
  report.modes[1] = options.second;
  std::map<std::string, std::size_t> row_of;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    auto [it, inserted] = row_of.emplace(corpus[k].family, report.rows.size());
    if (inserted) report.rows.push_back({corpus[k].family});
    BenchRow& row = report.rows[it->second];
    const Measurement& m = measured[k];
    ++row.instances;
    for (int side = 0; side < 2; ++side) {
      row.seconds[side] += m.seconds[side];
      row.failures[side] += m.failed[side] ? 1 : 0;
    }
    if (!m.failed[0] && !m.failed[1]) {
      row.prunings[0] += m.removals[0];
      row.prunings[1] += m.removals[1];
    }
  }
  return report;
}

std::vector<CorpusEntry> GenerateFamilyCorpus(
    std::span<const std::string> families, std::uint64_t per_family,
    std::uint64_t seed, const GenConfig& config) {
  std::vector<CorpusEntry> corpus;
  for (std::size_t f = 0; f < families.size(); ++f) {
    const std::uint64_t family_seed = seed + 1000003ULL * f;
    if (families[f] == "AMONG") {
      for (std::uint64_t k = 0; k < per_family; ++k) {
        SplitMix64 rng = SplitMix64::Stream(family_seed, k);
        corpus.push_back(
            {families[f], RandomAmongInstance(config, rng, Mode::kExact)});
      }
      continue;
    }
    const CounterDfa dfa = Catalog(families[f]);
    for (std::uint64_t k = 0; k < per_family; ++k) {
      corpus.push_back({families[f], FamilyInstance(config, dfa, family_seed,
                                                    k, Mode::kExact)});
    }
  }
  return corpus;
}

std::string FormatTable(const BenchReport& report, bool with_seconds) {
  const std::string a(ModeName(report.modes[0]));
  const std::string b(ModeName(report.modes[1]));
  std::vector<std::string> labels;
  if (with_seconds) {
    labels.push_back("sec:" + a);
    labels.push_back("sec:" + b);
  }
  for (const char* what : {"fail:", "prune:"}) {
    labels.push_back(what + a);
    labels.push_back(what + b);
  }
  std::vector<int> widths;
  for (const std::string& label : labels) {
    widths.push_back(std::max<int>(10, static_cast<int>(label.size()) + 2));
  }
  std::ostringstream out;
  out << std::left << std::setw(12) << "family" << std::right << std::setw(8)
      << "#inst";
  for (std::size_t c = 0; c < labels.size(); ++c) {
    out << std::setw(widths[c]) << labels[c];
  }
  out << '\n';
  for (const BenchRow& row : report.rows) {
    out << std::left << std::setw(12) << row.family << std::right
        << std::setw(8) << row.instances;
    std::size_t c = 0;
    if (with_seconds) {
      out << std::fixed << std::setprecision(3);
      out << std::setw(widths[c++]) << row.seconds[0];
      out << std::setw(widths[c++]) << row.seconds[1];
    }
    out << std::setw(widths[c++]) << row.failures[0];
    out << std::setw(widths[c++]) << row.failures[1];
    out << std::setw(widths[c++]) << row.prunings[0];
    out << std::setw(widths[c++]) << row.prunings[1] << '\n';
  }
  return out.str();
}

std::string FormatTsv(const BenchReport& report, bool with_seconds) {
  const std::string a(ModeName(report.modes[0]));
  const std::string b(ModeName(report.modes[1]));
  std::ostringstream out;
  out << "family\tinstances";
  if (with_seconds) out << "\tseconds_" << a << "\tseconds_" << b;
  out << "\tfailures_" << a << "\tfailures_" << b << "\tprunings_" << a
      << "\tprunings_" << b << '\n';
  for (const BenchRow& row : report.rows) {
    out << row.family << '\t' << row.instances;
    if (with_seconds) {
      out << std::fixed << std::setprecision(6) << '\t' << row.seconds[0]
          << '\t' << row.seconds[1];
    }
    out << '\t' << row.failures[0] << '\t' << row.failures[1] << '\t'
        << row.prunings[0] << '\t' << row.prunings[1] << '\n';
  }
  return out.str();
}

}  // namespace regcount
