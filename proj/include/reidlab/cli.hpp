// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace reidlab {

/// Exit-code contract shared by all subcommands:
///   0  success (inequality certified / all trials certified / exact match)
///   1  substantive negative (VIOLATED, or a campaign with a failing trial)
///   2  bad flags, unparsable input, or failed validation
///   3  INCONCLUSIVE (cmd_check only)
inline constexpr int kExitHolds = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

/// Parses "a..b" (inclusive range) or a comma list "2,4,6".  Every value must
/// lie in [1, 64]; throws ParseError otherwise.
std::vector<std::size_t> parse_dims(const std::string& text);

struct CheckCmdOptions {
  std::string a_path;
  std::string k_path;
  double epsilon = 0.0;  // 0 means the per-instance default
  double atol = 1e-10;
  double rtol = 1e-10;
  bool human = false;
};

struct FuzzCmdOptions {
  std::string hypothesis = "selfadjoint";  // selfadjoint | normal | cohypo
  std::string dims = "2..8";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  double epsilon = 0.0;  // 0 means the per-instance default
  double atol = 1e-10;
  double rtol = 1e-10;
  std::string dump_dir;
  bool human = false;
};

struct CounterexampleCmdOptions {
  std::size_t n = 8;
  bool human = false;
};

struct ProofStepsCmdOptions {
  std::string dims = "2..8";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  double atol = 1e-10;
  double rtol = 1e-10;
  bool human = false;
};

/// Certify |<A K x, x>| <= ||K|| <A x, x> for matrices loaded from JSON
/// files.  Prints the certificate (JSON by default) to `out`, diagnostics to
/// `err`.  Returns 0 / 1 / 3 by status, 2 on parse or validation failure.
int cmd_check(const CheckCmdOptions& options, std::ostream& out,
              std::ostream& err);

/// Seeded campaign over a hypothesis class.  Returns 0 iff every trial is
/// CERTIFIED_HOLDS, 1 otherwise, 2 on bad flags.
int cmd_fuzz(const FuzzCmdOptions& options, std::ostream& out,
             std::ostream& err);

/// Reproduces the truncated-shift violation chain in integer arithmetic.
/// Returns 0 iff lhs = 2, rhs = 1, gap = 1 exactly and the sweep certifier
/// independently reports VIOLATED; 1 on mismatch, 2 when n < 2.
int cmd_counterexample(const CounterexampleCmdOptions& options,
                       std::ostream& out, std::ostream& err);

/// Runs the deduction-chain checks over a seeded campaign plus the pinned
/// Jordan-block falsification.  Returns 0 iff everything holds, 1 otherwise,
/// 2 on bad flags.
int cmd_proofsteps(const ProofStepsCmdOptions& options, std::ostream& out,
                   std::ostream& err);

}  // namespace reidlab
