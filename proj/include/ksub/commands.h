// Copyright 2026 The Authors.
//
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

// The solve / bench / verify commands behind the ksubmod tool. Each takes its
// parsed options and two streams and returns the process exit code:
//
//   0  success
//   1  any other failure (I/O, invalid configuration)
//   2  instance or config file does not parse
//   3  brute-force or verification budget exceeded
//   4  epsilon missing or outside (0, 1)

#ifndef KSUB_COMMANDS_H_
#define KSUB_COMMANDS_H_

#include <atomic>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "ksub/generators.h"
#include "ksub/instance.h"
#include "ksub/matroid.h"
#include "ksub/solvers.h"
#include "ksub/verify.h"

namespace ksub {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitCap = 3,
  kExitEpsilon = 4,
};

// Shortest decimal form that reads back to the same double.
inline std::string FormatReal(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

inline std::string FormatMillis(std::chrono::nanoseconds ns) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << ns.count() / 1e6;
  return out.str();
}

namespace internal {

inline std::string Labels(const Assignment& a, char sep) {
  std::string out;
  for (int e = 0; e < a.n(); ++e) {
    if (e > 0) out += sep;
    out += std::to_string(a[e]);
  }
  return out;
}

inline std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline int RankOf(const AnyMatroid& m) {
  OracleCounters scratch;
  return Rank(m, scratch);
}

}  // namespace internal

// ---------------------------------------------------------------------------
// solve

struct SolveOptions {
  std::string instance_path;
  std::string solver = "threshold";  // threshold | greedy | brute
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
  std::string format = "human";  // json | csv | human
  std::uint64_t cap = BruteForceOptions{}.max_assignments;
};

inline nlohmann::json ReportToJson(const SolveReport& report) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const Round& r : report.rounds) {
    rounds.push_back(
        {{"threshold", r.threshold}, {"elements_added", r.elements_added}});
  }
  std::vector<int> labels(report.assignment.labels().begin(),
                          report.assignment.labels().end());
  return {{"solver", report.solver},
          {"value", report.value},
          {"assignment", labels},
          {"support", Support(report.assignment)},
          {"eo_calls", report.counters.eo_calls},
          {"io_calls", report.counters.io_calls},
          {"rank", report.rank},
          {"elements_added", report.elements_added()},
          {"rounds", rounds},
          {"elapsed_ms", report.elapsed.count() / 1e6}};
}

inline void PrintReport(const SolveReport& report, const std::string& format,
                        std::ostream& out) {
  if (format == "json") {
    out << ReportToJson(report).dump(2) << "\n";
  } else if (format == "csv") {
    out << "solver,value,support_size,eo_calls,io_calls,rounds,rank,"
           "elapsed_ms,assignment\n"
        << report.solver << ',' << FormatReal(report.value) << ','
        << report.assignment.SupportSize() << ',' << report.counters.eo_calls
        << ',' << report.counters.io_calls << ',' << report.rounds.size()
        << ',' << report.rank << ',' << FormatMillis(report.elapsed) << ','
        << internal::Labels(report.assignment, ' ') << "\n";
  } else {
    out << "solver:      " << report.solver << "\n"
        << "value:       " << FormatReal(report.value) << "\n"
        << "assignment:  " << report.assignment << "\n"
        << "support:     " << report.assignment.SupportSize() << " element(s)\n"
        << "eo_calls:    " << report.counters.eo_calls << "\n"
        << "io_calls:    " << report.counters.io_calls << "\n"
        << "rank:        " << report.rank << "\n"
        << "rounds:      " << report.rounds.size() << "\n";
    for (const Round& r : report.rounds) {
      out << "  w=" << FormatReal(r.threshold) << " added=" << r.elements_added
          << "\n";
    }
    out << "elapsed_ms:  " << FormatMillis(report.elapsed) << "\n";
  }
}

inline void PrintBruteForce(const BruteForceResult& result,
                            const std::string& format, std::ostream& out) {
  std::vector<int> labels(result.assignment.labels().begin(),
                          result.assignment.labels().end());
  if (format == "json") {
    nlohmann::json doc = {{"solver", "brute"},
                          {"value", result.value},
                          {"max_opt_support_size", result.max_opt_support_size},
                          {"assignment", labels},
                          {"support", Support(result.assignment)},
                          {"enumerated", result.enumerated}};
    out << doc.dump(2) << "\n";
  } else if (format == "csv") {
    out << "solver,value,max_opt_support_size,enumerated,assignment\n"
        << "brute," << FormatReal(result.value) << ','
        << result.max_opt_support_size << ',' << result.enumerated << ','
        << internal::Labels(result.assignment, ' ') << "\n";
  } else {
    out << "solver:      brute\n"
        << "value:       " << FormatReal(result.value) << "\n"
        << "assignment:  " << result.assignment << "\n"
        << "max_opt_support_size: " << result.max_opt_support_size << "\n"
        << "enumerated:  " << result.enumerated << "\n";
  }
}

inline int RunSolve(const SolveOptions& options, std::ostream& out,
                    std::ostream& err) {
  if (options.format != "json" && options.format != "csv" &&
      options.format != "human") {
    err << "error: unknown format \"" << options.format << "\"\n";
    return kExitFailure;
  }
  if (options.solver == "threshold") {
    if (!options.epsilon) {
      err << "error: --epsilon is required for the threshold solver\n";
      return kExitEpsilon;
    }
    if (!(*options.epsilon > 0 && *options.epsilon < 1)) {
      err << "error: epsilon must lie in (0, 1), got " << *options.epsilon
          << "\n";
      return kExitEpsilon;
    }
  } else if (options.solver != "greedy" && options.solver != "brute") {
    err << "error: unknown solver \"" << options.solver << "\"\n";
    return kExitFailure;
  }

  InstanceSpec spec;
  try {
    spec = LoadInstance(options.instance_path);
  } catch (const InstanceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  const AnyFunction f = spec.Function();
  try {
    if (options.solver == "threshold") {
      ThresholdOptions t;
      t.epsilon = *options.epsilon;
      t.order_seed = options.seed;
      PrintReport(ThresholdDecreasingSolve(f, spec.matroid, t), options.format,
                  out);
    } else if (options.solver == "greedy") {
      PrintReport(GreedySolve(f, spec.matroid), options.format, out);
    } else {
      BruteForceOptions b;
      b.max_assignments = options.cap;
      PrintBruteForce(BruteForceSolve(f, spec.matroid, b), options.format, out);
    }
  } catch (const BruteForceCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyCommandOptions {
  std::string instance_path;
  bool sample = false;
  std::uint64_t pair_budget = VerifyOptions{}.pair_budget;
  std::uint64_t cap = BruteForceOptions{}.max_assignments;
  std::uint64_t seed = 0;
  std::string format = "human";  // json | human
};

inline nlohmann::json VerdictToJson(const Verdict& v) {
  nlohmann::json doc = {{"holds", v.holds},
                        {"exhaustive", v.exhaustive},
                        {"checks", v.checks}};
  if (v.counterexample) {
    std::ostringstream p, q;
    p << v.counterexample->p;
    q << v.counterexample->q;
    doc["counterexample"] = {
        {"p", p.str()}, {"q", q.str()}, {"detail", v.counterexample->detail}};
  }
  return doc;
}

inline int RunVerify(const VerifyCommandOptions& options, std::ostream& out,
                     std::ostream& err) {
  InstanceSpec spec;
  try {
    spec = LoadInstance(options.instance_path);
  } catch (const InstanceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  const AnyFunction f = spec.Function();
  VerifyOptions vo;
  vo.pair_budget = options.pair_budget;
  vo.allow_sampling = options.sample;
  vo.seed = options.seed;

  nlohmann::json doc;
  try {
    const Verdict pairwise = VerifyKSubmodular(f, vo);
    const Verdict orthant = VerifyViaOrthantAndPairwise(f, vo);
    const Verdict monotone = VerifyMonotone(f, vo);
    constexpr int kAxiomExhaustiveLimit = 12;
    if (spec.n > kAxiomExhaustiveLimit && !options.sample) {
      throw BudgetExceeded("matroid axiom check: n = " +
                           std::to_string(spec.n) +
                           " exceeds the exhaustive limit of 12");
    }
    const AxiomReport axioms =
        CheckMatroidAxioms(spec.matroid, kAxiomExhaustiveLimit, 20'000,
                           options.seed);
    doc["k_submodular"] = VerdictToJson(pairwise);
    doc["k_submodular_orthant_pairwise"] = VerdictToJson(orthant);
    doc["characterizations_agree"] = pairwise.holds == orthant.holds;
    doc["monotone"] = VerdictToJson(monotone);
    doc["matroid_axioms"] = {{"holds", axioms.holds},
                             {"exhaustive", axioms.exhaustive}};
    if (!axioms.holds) doc["matroid_axioms"]["violation"] = axioms.violation;
    doc["rank"] = internal::RankOf(spec.matroid);
    if (DomainSize(spec.n, spec.k) <= options.cap) {
      BruteForceOptions b;
      b.max_assignments = options.cap;
      const BruteForceResult opt = BruteForceSolve(f, spec.matroid, b);
      doc["opt"] = opt.value;
      doc["max_opt_support_size"] = opt.max_opt_support_size;
    } else {
      doc["opt"] = nullptr;
      doc["max_opt_support_size"] = nullptr;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (pass --sample to sample instead)\n";
    return kExitCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  if (options.format == "json") {
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  auto line = [&](const char* name, const nlohmann::json& v) {
    out << std::left << std::setw(34) << name
        << (v["holds"].get<bool>() ? "yes" : "no")
        << (v["exhaustive"].get<bool>() ? " (exhaustive)" : " (sampled)")
        << "\n";
    if (v.contains("counterexample")) {
      const auto& c = v["counterexample"];
      out << "  counterexample: p=" << c["p"].get<std::string>()
          << " q=" << c["q"].get<std::string>() << " ("
          << c["detail"].get<std::string>() << ")\n";
    }
    if (v.contains("violation")) {
      out << "  violation: " << v["violation"].get<std::string>() << "\n";
    }
  };
  line("k-submodular:", doc["k_submodular"]);
  line("k-submodular (orthant+pairwise):", doc["k_submodular_orthant_pairwise"]);
  line("monotone:", doc["monotone"]);
  line("matroid axioms:", doc["matroid_axioms"]);
  out << std::left << std::setw(34) << "rank:" << doc["rank"] << "\n";
  if (doc["opt"].is_null()) {
    out << std::setw(34) << "OPT:" << "skipped (domain exceeds --cap)\n";
  } else {
    out << std::setw(34) << "OPT:" << FormatReal(doc["opt"].get<double>())
        << "\n"
        << std::setw(34) << "max optimal support size:"
        << doc["max_opt_support_size"] << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

// One (instance, solver) measurement. ratio is present iff opt is present and
// positive.
struct BenchRow {
  std::string instance;
  std::string solver;
  int n = 0;
  int k = 0;
  int r = 0;
  std::optional<double> epsilon;
  double value = 0;
  std::optional<double> opt;
  std::optional<double> ratio;
  std::uint64_t eo_calls = 0;
  std::uint64_t io_calls = 0;
  int rounds = 0;
  std::chrono::nanoseconds elapsed{0};
  std::string error;
};

inline constexpr const char* kBenchColumns =
    "instance,solver,n,k,r,epsilon,value,opt,ratio,eo_calls,io_calls,rounds,"
    "elapsed_ms,error";

// Bench config (JSON). Every list is a grid axis; the sweep is their product.
//
//   {
//     "n": [6], "k": [2], "seeds": [1, 2], "epsilon": [0.1, 0.3],
//     "functions": ["modular", "modular_nonmonotone", "coverage"],
//     "matroids": [{"uniform": 3},
//                  {"partition": {"blocks": 2, "max_cap": 2}},
//                  {"binary": {"dimension": 3}}],
//     "solvers": ["threshold", "greedy"],
//     "value_range": 4,
//     "coverage": {"universe_size": 20, "density": 0.2},
//     "brute_cap": 1048576
//   }
//
// "threshold" yields one row per epsilon; "greedy" one row per instance.
struct BenchConfig {
  std::vector<int> n;
  std::vector<int> k;
  std::vector<std::uint64_t> seeds;
  std::vector<double> epsilon;
  std::vector<std::string> functions;
  std::vector<nlohmann::json> matroids;
  std::vector<std::string> solvers;
  double value_range = 4;
  int universe_size = 20;
  double density = 0.2;
  std::uint64_t brute_cap = BruteForceOptions{}.max_assignments;
};

inline BenchConfig ParseBenchConfig(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InstanceError("syntax error at byte " + std::to_string(e.byte) +
                        ": " + e.what());
  }
  if (!doc.is_object()) throw InstanceError("config: expected an object");
  BenchConfig config;
  auto list = [&](const char* key, auto& target) {
    if (!doc.contains(key)) return;
    try {
      doc.at(key).get_to(target);
    } catch (const nlohmann::json::exception& e) {
      throw InstanceError(std::string("config.") + key + ": " + e.what());
    }
  };
  list("n", config.n);
  list("k", config.k);
  list("seeds", config.seeds);
  list("epsilon", config.epsilon);
  list("functions", config.functions);
  list("matroids", config.matroids);
  list("solvers", config.solvers);
  list("value_range", config.value_range);
  list("brute_cap", config.brute_cap);
  if (doc.contains("coverage")) {
    const auto& c = doc["coverage"];
    try {
      if (c.contains("universe_size")) c["universe_size"].get_to(config.universe_size);
      if (c.contains("density")) c["density"].get_to(config.density);
    } catch (const nlohmann::json::exception& e) {
      throw InstanceError(std::string("config.coverage: ") + e.what());
    }
  }
  return config;
}

namespace internal {

struct BenchInstance {
  std::string id;
  int n = 0;
  int k = 0;
  std::string function;
  nlohmann::json matroid;
  std::uint64_t seed = 0;
};

inline std::string MatroidLabel(const nlohmann::json& m) {
  if (!m.is_object() || m.size() != 1) return "invalid";
  const std::string tag = m.begin().key();
  const auto& body = m.begin().value();
  if (tag == "uniform") return "uniform" + body.dump();
  if (tag == "partition") {
    return "partition" + body.value("blocks", nlohmann::json()).dump() + "x" +
           body.value("max_cap", nlohmann::json()).dump();
  }
  if (tag == "binary") {
    return "binary" + body.value("dimension", nlohmann::json()).dump();
  }
  return tag;
}

inline AnyMatroid BuildBenchMatroid(const nlohmann::json& m, int n,
                                    std::uint64_t seed) {
  if (!m.is_object() || m.size() != 1) {
    throw std::invalid_argument("matroid entry must have exactly one tag");
  }
  const std::string tag = m.begin().key();
  const auto& body = m.begin().value();
  if (tag == "uniform") return UniformMatroid(n, body.get<int>());
  if (tag == "partition") {
    return GenPartitionMatroid(n, body.at("blocks").get<int>(),
                               body.at("max_cap").get<int>(), seed);
  }
  if (tag == "binary") {
    return GenBinaryMatroid(n, body.at("dimension").get<int>(), seed);
  }
  throw std::invalid_argument("unknown matroid kind \"" + tag + "\"");
}

inline AnyFunction BuildBenchFunction(const BenchConfig& config,
                                      const BenchInstance& inst) {
  if (inst.function == "modular" || inst.function == "modular_nonmonotone") {
    ModularOptions o;
    o.n = inst.n;
    o.k = inst.k;
    o.value_range = config.value_range;
    o.monotone = inst.function == "modular";
    return GenModular(o, inst.seed);
  }
  if (inst.function == "coverage") {
    CoverageOptions o;
    o.n = inst.n;
    o.k = inst.k;
    o.universe_size = config.universe_size;
    o.density = config.density;
    return GenCoverage(o, inst.seed);
  }
  throw std::invalid_argument("unknown function family \"" + inst.function +
                              "\"");
}

inline std::vector<BenchRow> RunBenchInstance(const BenchConfig& config,
                                              const BenchInstance& inst) {
  std::vector<BenchRow> rows;
  auto row_template = [&](const std::string& solver) {
    BenchRow row;
    row.instance = inst.id;
    row.solver = solver;
    row.n = inst.n;
    row.k = inst.k;
    return row;
  };
  std::optional<AnyFunction> f;
  std::optional<AnyMatroid> m;
  std::string setup_error;
  try {
    f = BuildBenchFunction(config, inst);
    // Offset so the matroid draw is independent of the function draw.
    m = BuildBenchMatroid(inst.matroid, inst.n, inst.seed ^ 0x9e3779b97f4a7c15ull);
  } catch (const std::exception& e) {
    setup_error = e.what();
  }

  int r = 0;
  std::optional<double> opt;
  if (setup_error.empty()) {
    r = RankOf(*m);
    if (DomainSize(inst.n, inst.k) <= config.brute_cap) {
      BruteForceOptions b;
      b.max_assignments = config.brute_cap;
      opt = BruteForceSolve(*f, *m, b).value;
    }
  }
  auto finish = [&](BenchRow row, const SolveReport& report) {
    row.r = r;
    row.value = report.value;
    row.opt = opt;
    if (opt && *opt > 0) row.ratio = report.value / *opt;
    row.eo_calls = report.counters.eo_calls;
    row.io_calls = report.counters.io_calls;
    row.rounds = static_cast<int>(report.rounds.size());
    row.elapsed = report.elapsed;
    return row;
  };

  for (const std::string& solver : config.solvers) {
    if (solver == "threshold") {
      for (double eps : config.epsilon) {
        BenchRow row = row_template(solver);
        row.epsilon = eps;
        if (!setup_error.empty()) {
          row.error = setup_error;
          rows.push_back(row);
          continue;
        }
        try {
          ThresholdOptions t;
          t.epsilon = eps;
          rows.push_back(finish(row, ThresholdDecreasingSolve(*f, *m, t)));
        } catch (const std::exception& e) {
          row.error = e.what();
          rows.push_back(row);
        }
      }
    } else {
      BenchRow row = row_template(solver);
      if (!setup_error.empty()) {
        row.error = setup_error;
      } else if (solver == "greedy") {
        try {
          rows.push_back(finish(row, GreedySolve(*f, *m)));
          continue;
        } catch (const std::exception& e) {
          row.error = e.what();
        }
      } else {
        row.error = "unknown solver \"" + solver + "\"";
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace internal

// Runs the sweep; rows come back in config order regardless of `jobs`.
inline std::vector<BenchRow> RunBenchSweep(const BenchConfig& config,
                                           int jobs = 1) {
  std::vector<internal::BenchInstance> instances;
  for (int n : config.n) {
    for (int k : config.k) {
      for (const std::string& function : config.functions) {
        for (const nlohmann::json& matroid : config.matroids) {
          for (std::uint64_t seed : config.seeds) {
            internal::BenchInstance inst{"", n, k, function, matroid, seed};
            inst.id = "n" + std::to_string(n) + "-k" + std::to_string(k) +
                      "-" + function + "-" + internal::MatroidLabel(matroid) +
                      "-s" + std::to_string(seed);
            instances.push_back(std::move(inst));
          }
        }
      }
    }
  }
  std::vector<std::vector<BenchRow>> results(instances.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < instances.size(); i = next++) {
      results[i] = internal::RunBenchInstance(config, instances[i]);
    }
  };
  const int threads = std::max(1, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::vector<BenchRow> rows;
  for (auto& chunk : results) {
    for (auto& row : chunk) rows.push_back(std::move(row));
  }
  return rows;
}

inline void WriteBenchCsv(const std::vector<BenchRow>& rows, std::ostream& out) {
  auto opt = [](const std::optional<double>& v) {
    return v ? FormatReal(*v) : std::string();
  };
  out << kBenchColumns << "\n";
  for (const BenchRow& row : rows) {
    out << internal::CsvField(row.instance) << ',' << row.solver << ','
        << row.n << ',' << row.k << ',' << row.r << ',' << opt(row.epsilon)
        << ',' << FormatReal(row.value) << ',' << opt(row.opt) << ','
        << opt(row.ratio) << ',' << row.eo_calls << ',' << row.io_calls << ','
        << row.rounds << ',' << FormatMillis(row.elapsed) << ','
        << internal::CsvField(row.error) << "\n";
  }
}

inline void WriteBenchJson(const std::vector<BenchRow>& rows,
                           std::ostream& out) {
  auto opt = [](const std::optional<double>& v) -> nlohmann::json {
    if (v) return *v;
    return nullptr;
  };
  nlohmann::json doc = nlohmann::json::array();
  for (const BenchRow& row : rows) {
    doc.push_back({{"instance", row.instance},
                   {"solver", row.solver},
                   {"n", row.n},
                   {"k", row.k},
                   {"r", row.r},
                   {"epsilon", opt(row.epsilon)},
                   {"value", row.value},
                   {"opt", opt(row.opt)},
                   {"ratio", opt(row.ratio)},
                   {"eo_calls", row.eo_calls},
                   {"io_calls", row.io_calls},
                   {"rounds", row.rounds},
                   {"elapsed_ms", row.elapsed.count() / 1e6},
                   {"error", row.error}});
  }
  out << doc.dump(2) << "\n";
}

struct BenchOptions {
  std::string config_path;
  std::string format = "csv";  // csv | json
  int jobs = 1;
};

inline int RunBench(const BenchOptions& options, std::ostream& out,
                    std::ostream& err) {
  if (options.format != "csv" && options.format != "json") {
    err << "error: bench supports --format csv or json\n";
    return kExitFailure;
  }
  std::ifstream in(options.config_path);
  if (!in) {
    err << "error: " << options.config_path << ": cannot open file\n";
    return kExitParse;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  BenchConfig config;
  try {
    config = ParseBenchConfig(buffer.str());
  } catch (const InstanceError& e) {
    err << "error: " << options.config_path << ": " << e.what() << "\n";
    return kExitParse;
  }
  const std::vector<BenchRow> rows = RunBenchSweep(config, options.jobs);
  if (options.format == "csv") {
    WriteBenchCsv(rows, out);
  } else {
    WriteBenchJson(rows, out);
  }
  return kExitOk;
}

}  // namespace ksub

#endif  // KSUB_COMMANDS_H_
