// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reidlab/certifier.hpp"
#include "reidlab/io.hpp"
#include "reidlab/proof_steps.hpp"
#include "reidlab/tolerance.hpp"

namespace reidlab {

/// The three hypothesis classes the campaigns draw instances from: A K
/// self-adjoint, A K normal, and (A K)* hyponormal (which coincides with
/// normal at finite dimension; the generator documents the coincidence).
enum class HypothesisClass { SelfAdjoint, Normal, CoHyponormal };

const char* to_string(HypothesisClass c);

/// Accepts "selfadjoint", "normal", "cohypo"; throws ParseError otherwise.
HypothesisClass hypothesis_class_from_string(const std::string& s);

/// One certified trial of a fuzz campaign.  hypothesis_defect measures the
/// class membership of A K (operator norm of A K - (A K)* for the
/// self-adjoint class, norm of the commutator defect otherwise).
struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t dim = 0;
  CertStatus status = CertStatus::Inconclusive;
  double gap_upper = 0.0;
  double gap_lower = 0.0;
  double hypothesis_defect = 0.0;
  int strategy = 0;
  bool singular_A = false;
};

struct FuzzReport {
  std::string campaign_name;
  HypothesisClass hypothesis = HypothesisClass::SelfAdjoint;
  std::vector<std::size_t> dims;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double epsilon = 0.0;  // 0 means per-instance default
  TolerancePolicy tol{};
  std::vector<TrialRecord> verdicts;
  std::size_t count_holds = 0;
  std::size_t count_violated = 0;
  std::size_t count_inconclusive = 0;
  std::int64_t wall_time_ms = 0;
};

struct FuzzOptions {
  std::vector<std::size_t> dims{2, 3, 4, 5, 6, 7, 8};
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  double epsilon = 0.0;  // 0 means per-instance default
  TolerancePolicy tol{};
  std::string dump_dir;  // when non-empty, write each trial's A and K
};

/// Runs `trials` seeded certifications over the class.  Trial i uses
/// dim = dims[i % dims.size()] and seed = mix_seed(seed, i), so every record
/// is reproducible in isolation.  Deterministic for fixed options.
FuzzReport run_fuzz_campaign(HypothesisClass hypothesis,
                             const FuzzOptions& options);

bool all_trials_certified(const FuzzReport& report);

Json fuzz_report_to_json(const FuzzReport& report);

/// One instance pushed through the whole deduction chain.  `scale` is the
/// larger of 1 and the operator norm of A K, the reference for relative
/// defect checks.
struct ProofStepsTrial {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t dim = 0;
  HypothesisClass hypothesis = HypothesisClass::SelfAdjoint;
  double scale = 1.0;
  std::vector<ProofStepResult> steps;
  CertStatus final_status = CertStatus::Inconclusive;
  bool all_hold = false;
};

struct ProofStepsReport {
  std::string campaign_name;
  std::vector<std::size_t> dims;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  TolerancePolicy tol{};
  std::vector<ProofStepsTrial> records;
  // Pinned regression: the strict 2x2 Jordan block must keep violating the
  // dominated inequality against its absolute value (0.3 > 0.1 at the
  // witness), showing the hyponormality hypothesis carries weight.
  double jordan_lhs = 0.0;
  double jordan_rhs = 0.0;
  CertStatus jordan_status = CertStatus::Inconclusive;
  bool jordan_pinned = false;  // true iff the violation reproduced exactly
  bool all_pass = false;       // every step on every trial + the pin
  std::int64_t wall_time_ms = 0;
};

struct ProofStepsOptions {
  std::vector<std::size_t> dims{2, 3, 4, 5, 6, 7, 8};
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  TolerancePolicy tol{};
};

/// Alternates instances between the self-adjoint and normal product classes
/// and records, per instance: the contraction bound, the absolute-value
/// adjoint identity, square-root monotonicity of A K K* A <= ||K||^2 A^2,
/// the direct domination |(A K)*| <= ||K|| A, the conjugation identity at a
/// seeded unit vector, the dominated certificate for (A K)* against its
/// absolute value, and the final inequality certificate.
ProofStepsReport run_proofsteps_campaign(const ProofStepsOptions& options);

Json proofsteps_report_to_json(const ProofStepsReport& report);

}  // namespace reidlab
