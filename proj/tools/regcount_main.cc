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

// Command-line front end. Exit codes: 0 success, 1 constraint failure or
// fuzz violation, 2 usage or input error.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "regcount/automaton.h"
#include "regcount/bench.h"
#include "regcount/catalog.h"
#include "regcount/fuzz.h"
#include "regcount/instance.h"
#include "regcount/oracle.h"
#include "regcount/propagators.h"
#include "regcount/search.h"
#include "regcount/sweep.h"

namespace regcount {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::uint64_t DefaultCap() {
  if (const char* env = std::getenv("REGCOUNT_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad REGCOUNT_CAP '") + env + "'");
    }
  }
  return kDefaultCap;
}

std::string ReadStdin() {
  return {std::istreambuf_iterator<char>(std::cin),
          std::istreambuf_iterator<char>()};
}

nlohmann::json ParseJsonText(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

// Instance input shared by propagate, oracle, dump-sweep and solve: either
// an instance file (or "-" for stdin), or an automaton plus inline domains.
struct InstanceArgs {
  std::string instance_path;
  std::string automaton;
  std::vector<std::string> vars;
  int length = 0;
  std::string counter;
  std::string mode;

  void Register(CLI::App* app, bool with_mode) {
    app->add_option("instance", instance_path,
                    "Instance file, or '-' to read it from stdin");
    app->add_option("--automaton,-a", automaton,
                    "Automaton file, '-' for stdin, or catalog:NAME");
    app->add_option("--vars", vars,
                    "Per-position domains as comma-separated symbol names");
    app->add_option("--length,-n", length,
                    "Repeat a single --vars domain this many times");
    app->add_option("--counter", counter,
                    "Counter domain, e.g. 1,3 or 0-2");
    if (with_mode) {
      app->add_option("--mode,-m", mode,
                      "atmost | atleast | exact | decomposed");
    }
  }

  Instance Load() const {
    std::optional<Instance> instance;
    if (!instance_path.empty()) {
      if (!automaton.empty() || !vars.empty()) {
        throw UsageError("give either an instance file or --automaton/--vars");
      }
      if (instance_path == "-") {
        instance = InstanceFromJson(ParseJsonText(ReadStdin(), "stdin"));
      } else {
        instance = LoadInstanceFile(instance_path);
      }
    } else {
      if (automaton.empty()) {
        throw UsageError("need an instance file or --automaton");
      }
      instance = FromParts();
    }
    if (!counter.empty() && !instance_path.empty()) {
      instance->store = DomainStore(instance->store.vars(),
                                    ParseCounterList(counter));
      if (instance->signature) {
        instance->signature->natives.counter = instance->store.counter();
      }
    }
    if (!mode.empty()) {
      const auto parsed = ParseMode(mode);
      if (!parsed) throw UsageError("unknown mode '" + mode + "'");
      instance->mode = *parsed;
    }
    return std::move(*instance);
  }

 private:
  Instance FromParts() const {
    std::optional<CounterDfa> dfa;
    if (automaton == "-") {
      dfa = AutomatonFromJson(ParseJsonText(ReadStdin(), "stdin"));
    } else if (automaton.rfind("catalog:", 0) == 0) {
      dfa = Catalog(automaton.substr(8));
    } else {
      dfa = LoadAutomatonFile(automaton);
    }
    std::vector<std::string> lists = vars;
    if (length > 0) {
      if (lists.size() != 1) {
        throw UsageError("--length needs exactly one --vars domain");
      }
      lists.assign(length, lists.front());
    }
    std::vector<SymbolDomain> domains;
    for (const std::string& list : lists) {
      SymbolDomain d = SymbolDomain::Empty(dfa->alphabet_size());
      std::istringstream in(list);
      std::string name;
      while (std::getline(in, name, ',')) {
        if (name.empty()) continue;
        const auto symbol = dfa->FindSymbol(name);
        if (!symbol) throw ParseError("unknown symbol '" + name + "'");
        d.Insert(*symbol);
      }
      domains.push_back(std::move(d));
    }
    const CounterDomain n = counter.empty() ? CounterDomain{0}
                                            : ParseCounterList(counter);
    return {std::move(*dfa), DomainStore(std::move(domains), n), Mode::kExact,
            std::nullopt};
  }
};

std::string ValueName(const Instance& instance, int var, Counter value) {
  if (var == kCounterVar) return std::to_string(value);
  return instance.dfa.symbol_name(static_cast<SymbolId>(value));
}

std::string VarName(int var) {
  return var == kCounterVar ? "N" : "x" + std::to_string(var + 1);
}

// Native value removals implied by a symbol removal at position `var`.
std::vector<std::string> RemovalLines(const Instance& instance,
                                      const Removal& r) {
  if (r.var == kCounterVar || !instance.signature) {
    return {VarName(r.var) + " != " + ValueName(instance, r.var, r.value)};
  }
  std::vector<std::string> lines;
  for (NativeValue v : instance.signature->natives.vars[r.var]) {
    if (instance.signature->map.Map(r.var, v) == static_cast<SymbolId>(r.value)) {
      lines.push_back(VarName(r.var) + " != " + std::to_string(v));
    }
  }
  return lines;
}

int RunValidate(const std::string& path) {
  const nlohmann::json j = path == "-" ? ParseJsonText(ReadStdin(), "stdin")
                                       : ReadJsonFile(path);
  if (j.is_object() && j.contains("vars")) {
    InstanceFromJson(j, std::filesystem::path(path).parent_path());
    std::cout << "ok: instance\n";
    return kExitOk;
  }
  const AutomatonDescription d = DescriptionFromJson(j);
  if (auto error = Validate(d)) {
    std::cerr << "malformed automaton: " << *error << '\n';
    return kExitUsage;
  }
  std::cout << "ok: automaton with " << d.num_states << " states, "
            << d.alphabet.size() << " symbols\n";
  return kExitOk;
}

int RunCatalog(const std::string& name, bool list) {
  if (list || name.empty()) {
    for (const std::string& n : CatalogNames()) std::cout << n << '\n';
    return kExitOk;
  }
  std::cout << AutomatonToJson(Catalog(name)).dump(2) << '\n';
  return kExitOk;
}

int RunPropagate(const Instance& instance) {
  DomainStore store = instance.store;
  const PropagationOutcome outcome =
      Propagate(instance.mode, instance.dfa, store);
  std::cout << "status: " << (outcome.failed() ? "failed" : "fixpoint")
            << '\n';
  for (const Removal& r : outcome.removals) {
    for (const std::string& line : RemovalLines(instance, r)) {
      std::cout << line << '\n';
    }
  }
  std::cout << "passes: " << outcome.passes << '\n';
  return outcome.failed() ? kExitFailed : kExitOk;
}

int RunOracle(const Instance& instance, std::uint64_t cap) {
  const Relation relation = RelationOf(instance.mode);
  std::vector<std::pair<std::string, std::vector<std::string>>> supported;
  std::vector<std::string> unsupported;
  bool satisfiable;
  std::uint64_t solutions;
  if (instance.signature) {
    const auto& natives = instance.signature->natives;
    const NativeSupportReport report = EnumerateNative(
        instance.dfa, instance.signature->map, natives, relation, cap);
    satisfiable = report.satisfiable;
    solutions = report.solution_count;
    for (std::size_t i = 0; i < natives.vars.size(); ++i) {
      std::vector<std::string> names;
      for (NativeValue v : natives.vars[i]) {
        const bool ok = std::binary_search(report.supported[i].begin(),
                                           report.supported[i].end(), v);
        if (ok) {
          names.push_back(std::to_string(v));
        } else {
          unsupported.push_back(VarName(static_cast<int>(i)) +
                                " != " + std::to_string(v));
        }
      }
      supported.push_back({VarName(static_cast<int>(i)), names});
    }
    std::vector<std::string> names;
    for (Counter v : natives.counter.values()) {
      if (report.supported_counter.Contains(v)) {
        names.push_back(std::to_string(v));
      } else {
        unsupported.push_back("N != " + std::to_string(v));
      }
    }
    supported.push_back({"N", names});
  } else {
    const SupportReport report =
        Enumerate(instance.dfa, instance.store, relation, cap);
    satisfiable = report.satisfiable;
    solutions = report.solution_count;
    for (int i = 0; i < instance.store.num_vars(); ++i) {
      std::vector<std::string> names;
      instance.store.var(i).ForEach([&](SymbolId l) {
        if (report.supported[i].Contains(l)) {
          names.push_back(instance.dfa.symbol_name(l));
        } else {
          unsupported.push_back(VarName(i) + " != " +
                                instance.dfa.symbol_name(l));
        }
      });
      supported.push_back({VarName(i), names});
    }
    std::vector<std::string> names;
    for (Counter v : instance.store.counter().values()) {
      if (report.supported_counter.Contains(v)) {
        names.push_back(std::to_string(v));
      } else {
        unsupported.push_back("N != " + std::to_string(v));
      }
    }
    supported.push_back({"N", names});
  }
  std::cout << "status: " << (satisfiable ? "satisfiable" : "unsatisfiable")
            << '\n';
  std::cout << "solutions: " << solutions << '\n';
  for (const auto& [var, names] : supported) {
    std::cout << "supported: " << var << " = {";
    for (std::size_t k = 0; k < names.size(); ++k) {
      std::cout << (k ? ", " : "") << names[k];
    }
    std::cout << "}\n";
  }
  for (const std::string& line : unsupported) std::cout << line << '\n';
  return satisfiable ? kExitOk : kExitFailed;
}

void PrintRows(const CounterDfa& dfa, const SweepRows& rows) {
  for (int i = rows.first_row(); i <= rows.last_row(); ++i) {
    std::cout << i << ':';
    bool first = true;
    for (StateId q = 0; q < dfa.num_states(); ++q) {
      const Counter c = rows.at(i, q);
      if (c == kUnreachable) continue;
      std::cout << (first ? " " : ",") << dfa.state_name(q) << '=' << c;
      first = false;
    }
    std::cout << '\n';
  }
}

int RunDumpSweep(const Instance& instance, const std::string& rows,
                 const std::string& extremum) {
  if (instance.store.AnyEmpty()) {
    throw UsageError("dump-sweep needs nonempty domains");
  }
  const SweepTable table = ComputeSweeps(instance.dfa, instance.store);
  const bool want_min = extremum == "min" || extremum == "both";
  const bool want_max = extremum == "max" || extremum == "both";
  const bool want_pre = rows == "pre" || rows == "all";
  const bool want_suf = rows == "suf" || rows == "all";
  const bool labelled = (want_min && want_max) || (want_pre && want_suf);
  auto section = [&](const char* label, const SweepRows& r) {
    if (labelled) std::cout << "# " << label << '\n';
    PrintRows(instance.dfa, r);
  };
  if (want_pre && want_min) section("pre_min", table.pre_min);
  if (want_pre && want_max) section("pre_max", table.pre_max);
  if (want_suf && want_min) section("suf_min", table.suf_min);
  if (want_suf && want_max) section("suf_max", table.suf_max);
  return kExitOk;
}

int RunSolve(const Instance& instance, bool list_solutions) {
  SearchOptions options;
  options.collect_solutions = list_solutions;
  const SearchStats stats =
      Solve(instance.dfa, instance.store, instance.mode, options);
  std::cout << "mode: " << ModeName(instance.mode) << '\n'
            << "solutions: " << stats.solutions << '\n'
            << "nodes: " << stats.nodes << '\n'
            << "failures: " << stats.failures << '\n'
            << "prunings: " << stats.prunings << '\n';
  for (const Solution& s : stats.solution_list) {
    std::cout << "solution:";
    for (SymbolId l : s.word) std::cout << ' ' << instance.dfa.symbol_name(l);
    std::cout << " ; N=" << s.n << '\n';
  }
  return stats.solutions > 0 ? kExitOk : kExitFailed;
}

std::vector<Mode> FuzzModes(const std::string& mode) {
  if (mode == "all") return {Mode::kAtMost, Mode::kAtLeast, Mode::kExact};
  const auto parsed = ParseMode(mode);
  if (!parsed) throw UsageError("unknown mode '" + mode + "'");
  return {*parsed};
}

int RunFuzzCommand(FuzzOptions options, const std::string& out_dir) {
  const FuzzReport report = RunFuzz(options);
  for (const auto& [mode, tally] : report.tallies) {
    std::cout << ModeName(mode) << ": runs=" << tally.runs
              << " failures=" << tally.failures
              << " removals=" << tally.removals << " gaps=" << tally.gaps
              << '\n';
  }
  std::cout << "instances: " << report.instances << '\n'
            << "violations: " << report.violations.size() << '\n';
  for (const FuzzViolation& v : report.violations) {
    std::cout << DescribeViolation(v) << '\n';
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      Instance instance =
          CorpusInstance(options.config, options.seed, v.index, v.mode);
      nlohmann::json j = InstanceToJson(instance);
      j["seed"] = options.seed;
      j["index"] = v.index;
      j["violation"] = v.kind;
      WriteJsonFile(std::filesystem::path(out_dir) /
                        ("violation_" + std::to_string(v.index) + "_" +
                         std::string(ModeName(v.mode)) + ".json"),
                    j);
    }
  }
  return report.ok() ? kExitOk : kExitFailed;
}

int RunBenchCommand(const std::string& corpus_dir,
                    const std::vector<std::string>& families,
                    std::uint64_t count, std::uint64_t seed,
                    const std::string& format, bool no_seconds, int threads) {
  std::vector<CorpusEntry> corpus;
  if (!corpus_dir.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      Instance instance = LoadInstanceFile(file);
      std::string family = instance.dfa.name();
      if (family.empty()) family = file.stem().string();
      corpus.push_back({std::move(family), std::move(instance)});
    }
  } else {
    corpus = GenerateFamilyCorpus(families, count, seed);
  }
  BenchOptions options;
  options.threads = threads;
  const BenchReport report = Bench(corpus, options);
  if (format == "tsv") {
    std::cout << FormatTsv(report, !no_seconds);
  } else {
    std::cout << FormatTable(report, !no_seconds);
  }
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Regular counting constraints over counter automata"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check an automaton or instance file");
  validate->add_option("file", validate_path, "File, or '-' for stdin")->required();

  std::string catalog_name;
  bool catalog_list = false;
  auto* catalog = app.add_subcommand("catalog", "Print a built-in automaton as JSON");
  catalog->add_option("name", catalog_name, "AAB | AMONG | RST | B");
  catalog->add_flag("--list", catalog_list, "List the names");

  InstanceArgs propagate_args;
  auto* propagate = app.add_subcommand("propagate", "Run a propagator once to its fixpoint");
  propagate_args.Register(propagate, true);

  InstanceArgs oracle_args;
  std::uint64_t oracle_cap = 0;
  auto* oracle = app.add_subcommand("oracle", "Enumerate ground solutions and report supports");
  oracle_args.Register(oracle, true);
  oracle->add_option("--cap", oracle_cap, "Maximum number of ground sequences");

  InstanceArgs sweep_args;
  std::string sweep_rows = "pre";
  std::string sweep_extremum = "min";
  auto* sweep = app.add_subcommand("dump-sweep", "Print prefix/suffix sweep rows");
  sweep_args.Register(sweep, false);
  sweep->add_option("--rows", sweep_rows, "pre | suf | all")
      ->check(CLI::IsMember({"pre", "suf", "all"}));
  sweep->add_option("--extremum,-e", sweep_extremum, "min | max | both")
      ->check(CLI::IsMember({"min", "max", "both"}));

  InstanceArgs solve_args;
  bool solve_list = false;
  auto* solve = app.add_subcommand("solve", "Depth-first search counting solutions");
  solve_args.Register(solve, true);
  solve->add_flag("--solutions", solve_list, "Print every solution");

  FuzzOptions fuzz_options;
  std::string fuzz_mode = "all";
  std::string fuzz_out;
  std::uint64_t fuzz_cap = 0;
  auto* fuzz = app.add_subcommand("fuzz", "Differential test against the oracle");
  fuzz->add_option("--seed", fuzz_options.seed, "Corpus seed");
  fuzz->add_option("--count", fuzz_options.count, "Number of instances");
  fuzz->add_option("--mode", fuzz_mode, "atmost | atleast | exact | decomposed | all");
  fuzz->add_option("--cap", fuzz_cap, "Oracle cap");
  fuzz->add_option("--out", fuzz_out, "Directory for violating instances");
  fuzz->add_option("--threads", fuzz_options.threads, "Worker threads");
  fuzz->add_option("--max-states", fuzz_options.config.max_states,
                   "Largest automaton");
  fuzz->add_option("--max-alphabet", fuzz_options.config.max_alphabet,
                   "Largest alphabet");
  fuzz->add_option("--max-length", fuzz_options.config.max_length,
                   "Longest sequence");
  fuzz->add_option("--increment-probability",
                   fuzz_options.config.increment_probability,
                   "Chance that an arc increments the counter");

  std::string bench_corpus;
  std::vector<std::string> bench_families = {"AMONG", "AAB", "RST"};
  std::uint64_t bench_count = 1000;
  std::uint64_t bench_seed = 0;
  std::string bench_format = "table";
  bool bench_no_seconds = false;
  int bench_threads = 1;
  auto* bench = app.add_subcommand("bench", "Compare exact and decomposed propagation");
  bench->add_option("--corpus", bench_corpus, "Directory of instance files");
  bench->add_option("--families", bench_families, "Catalog families to generate")
      ->delimiter(',');
  bench->add_option("--count", bench_count, "Instances per generated family");
  bench->add_option("--seed", bench_seed, "Generation seed");
  bench->add_option("--format", bench_format, "table | tsv")
      ->check(CLI::IsMember({"table", "tsv"}));
  bench->add_flag("--no-seconds", bench_no_seconds, "Omit timing columns");
  bench->add_option("--threads", bench_threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return RunValidate(validate_path);
    if (*catalog) return RunCatalog(catalog_name, catalog_list);
    if (*propagate) return RunPropagate(propagate_args.Load());
    if (*oracle) {
      return RunOracle(oracle_args.Load(),
                       oracle_cap ? oracle_cap : DefaultCap());
    }
    if (*sweep) return RunDumpSweep(sweep_args.Load(), sweep_rows, sweep_extremum);
    if (*solve) return RunSolve(solve_args.Load(), solve_list);
    if (*fuzz) {
      fuzz_options.modes = FuzzModes(fuzz_mode);
      fuzz_options.cap = fuzz_cap ? fuzz_cap : DefaultCap();
      return RunFuzzCommand(fuzz_options, fuzz_out);
    }
    if (*bench) {
      return RunBenchCommand(bench_corpus, bench_families, bench_count,
                             bench_seed, bench_format, bench_no_seconds,
                             bench_threads);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace regcount

int main(int argc, char** argv) { return regcount::Main(argc, argv); }
