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

// ksubmod: maximize k-submodular functions under matroid constraints.
//
//   ksubmod solve  INSTANCE --solver threshold --epsilon 0.1 [--seed S]
//   ksubmod bench  CONFIG   [--format csv|json] [--jobs N]
//   ksubmod verify INSTANCE [--sample] [--cap N]

#include <iostream>

#include "CLI11.hpp"
#include "ksub/commands.h"

int main(int argc, char** argv) {
  CLI::App app{"k-submodular maximization under matroid constraints"};
  app.require_subcommand(1);

  ksub::SolveOptions solve;
  double epsilon = 0;
  std::uint64_t seed = 0;
  auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
  solve_cmd->add_option("instance", solve.instance_path, "instance file")
      ->required();
  solve_cmd->add_option("--solver", solve.solver, "threshold | greedy | brute")
      ->capture_default_str();
  auto* eps_opt = solve_cmd->add_option(
      "--epsilon", epsilon, "threshold decay, in (0, 1); required for threshold");
  auto* seed_opt = solve_cmd->add_option(
      "--seed", seed, "shuffle candidate order with this seed");
  solve_cmd->add_option("--format", solve.format, "json | csv | human")
      ->capture_default_str();
  solve_cmd->add_option("--cap", solve.cap,
                        "largest (k+1)^n the brute-force solver enumerates")
      ->capture_default_str();

  ksub::BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "run a parameter sweep");
  bench_cmd->add_option("config", bench.config_path, "sweep config file")
      ->required();
  bench_cmd->add_option("--format", bench.format, "csv | json")
      ->capture_default_str();
  bench_cmd->add_option("--jobs", bench.jobs, "worker threads")
      ->capture_default_str();

  ksub::VerifyCommandOptions verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "check structural properties of an instance");
  verify_cmd->add_option("instance", verify.instance_path, "instance file")
      ->required();
  verify_cmd->add_flag("--sample", verify.sample,
                       "sample when exhaustive checking exceeds the budget");
  verify_cmd->add_option("--pair-budget", verify.pair_budget,
                         "largest number of assignment pairs checked "
                         "exhaustively")
      ->capture_default_str();
  verify_cmd->add_option("--cap", verify.cap,
                         "largest (k+1)^n enumerated for OPT")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "sampling seed");
  verify_cmd->add_option("--format", verify.format, "json | human")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*solve_cmd) {
    if (*eps_opt) solve.epsilon = epsilon;
    if (*seed_opt) solve.seed = seed;
    return ksub::RunSolve(solve, std::cout, std::cerr);
  }
  if (*bench_cmd) return ksub::RunBench(bench, std::cout, std::cerr);
  return ksub::RunVerify(verify, std::cout, std::cerr);
}
