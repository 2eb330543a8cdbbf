// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "CLI11.hpp"
#include "reidlab/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "reidlab: certified verification of dominated operator inequalities "
      "|<AKx,x>| <= ||K|| <Ax,x> on finite-dimensional complex spaces"};
  app.require_subcommand(1);

  reidlab::CheckCmdOptions check;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "Certify the inequality for A and K loaded from JSON files");
  check_cmd->add_option("A", check.a_path, "JSON file holding the positive matrix A")
      ->required();
  check_cmd->add_option("K", check.k_path, "JSON file holding the matrix K")
      ->required();
  check_cmd->add_option("--epsilon", check.epsilon,
                        "sweep resolution (default: 1e-6 * scale)");
  check_cmd->add_option("--atol", check.atol, "absolute tolerance");
  check_cmd->add_option("--rtol", check.rtol, "relative tolerance");
  bool check_json = false;
  CLI::Option* check_json_opt =
      check_cmd->add_flag("--json", check_json, "JSON output (default)");
  check_cmd->add_flag("--human", check.human, "human-readable output")
      ->excludes(check_json_opt);

  reidlab::FuzzCmdOptions fuzz;
  CLI::App* fuzz_cmd = app.add_subcommand(
      "fuzz", "Run a seeded certification campaign over a hypothesis class");
  fuzz_cmd->add_option("--class", fuzz.hypothesis,
                       "hypothesis class: selfadjoint | normal | cohypo");
  fuzz_cmd->add_option("--dims", fuzz.dims,
                       "dimension list, e.g. 2..8 or 2,4,6");
  fuzz_cmd->add_option("--trials", fuzz.trials, "number of trials (>= 1)");
  fuzz_cmd->add_option("--seed", fuzz.seed, "campaign seed");
  fuzz_cmd->add_option("--epsilon", fuzz.epsilon,
                       "sweep resolution (default: 1e-6 * scale per trial)");
  fuzz_cmd->add_option("--atol", fuzz.atol, "absolute tolerance");
  fuzz_cmd->add_option("--rtol", fuzz.rtol, "relative tolerance");
  fuzz_cmd->add_option("--dump", fuzz.dump_dir,
                       "directory to write each trial's A and K as JSON");
  bool fuzz_json = false;
  CLI::Option* fuzz_json_opt =
      fuzz_cmd->add_flag("--json", fuzz_json, "JSON output (default)");
  fuzz_cmd->add_flag("--human", fuzz.human, "human-readable output")
      ->excludes(fuzz_json_opt);

  reidlab::CounterexampleCmdOptions cex;
  CLI::App* cex_cmd = app.add_subcommand(
      "counterexample",
      "Reproduce the truncated-shift violation chain exactly");
  cex_cmd->add_option("-n,--n", cex.n, "truncation dimension (>= 2)");
  bool cex_json = false;
  CLI::Option* cex_json_opt =
      cex_cmd->add_flag("--json", cex_json, "JSON output (default)");
  cex_cmd->add_flag("--human", cex.human, "human-readable output")
      ->excludes(cex_json_opt);

  reidlab::ProofStepsCmdOptions steps;
  CLI::App* steps_cmd = app.add_subcommand(
      "proofsteps",
      "Check every link of the deduction chain on sampled instances");
  steps_cmd->add_option("--dims", steps.dims,
                        "dimension list, e.g. 2..8 or 2,4,6");
  steps_cmd->add_option("--trials", steps.trials, "number of trials (>= 1)");
  steps_cmd->add_option("--seed", steps.seed, "campaign seed");
  steps_cmd->add_option("--atol", steps.atol, "absolute tolerance");
  steps_cmd->add_option("--rtol", steps.rtol, "relative tolerance");
  bool steps_json = false;
  CLI::Option* steps_json_opt =
      steps_cmd->add_flag("--json", steps_json, "JSON output (default)");
  steps_cmd->add_flag("--human", steps.human, "human-readable output")
      ->excludes(steps_json_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : reidlab::kExitUsage;
  }

  if (app.got_subcommand(check_cmd)) {
    return reidlab::cmd_check(check, std::cout, std::cerr);
  }
  if (app.got_subcommand(fuzz_cmd)) {
    return reidlab::cmd_fuzz(fuzz, std::cout, std::cerr);
  }
  if (app.got_subcommand(cex_cmd)) {
    return reidlab::cmd_counterexample(cex, std::cout, std::cerr);
  }
  if (app.got_subcommand(steps_cmd)) {
    return reidlab::cmd_proofsteps(steps, std::cout, std::cerr);
  }
  return reidlab::kExitUsage;
}
