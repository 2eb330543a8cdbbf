// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#include "reidlab/report.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <utility>

#include "reidlab/errors.hpp"
#include "reidlab/generators.hpp"
#include "reidlab/predicates.hpp"
#include "reidlab/rng.hpp"
#include "reidlab/spectral.hpp"

namespace reidlab {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

GeneratedPair draw_pair(HypothesisClass hypothesis, const GenConfig& cfg) {
  switch (hypothesis) {
    case HypothesisClass::SelfAdjoint:
      return pair_selfadjoint_product(cfg);
    case HypothesisClass::Normal:
      return pair_normal_product(cfg);
    case HypothesisClass::CoHyponormal:
      return pair_cohyponormal_product(cfg);
  }
  throw std::invalid_argument("unknown hypothesis class");
}

double class_defect(HypothesisClass hypothesis, const ComplexMatrix& m) {
  if (hypothesis == HypothesisClass::SelfAdjoint) {
    return operator_norm(m - adjoint(m));
  }
  return normality_defect(m).norm;
}

void validate_campaign_options(std::size_t trials,
                               const std::vector<std::size_t>& dims) {
  if (trials == 0) {
    throw std::invalid_argument("trials must be at least 1");
  }
  if (dims.empty()) {
    throw std::invalid_argument("dims must be non-empty");
  }
  for (std::size_t d : dims) {
    if (d == 0 || d > 64) {
      throw std::invalid_argument("every dim must lie in [1, 64]");
    }
  }
}

/// Unit vector with seeded complex-gaussian entries.
ComplexVector random_unit_vector(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  ComplexVector x(dim);
  for (std::size_t i = 0; i < dim; ++i) x[i] = rng.complex_gaussian();
  if (norm(x) == 0.0) x[0] = 1.0;  // unreachable in practice
  return normalized(x);
}

Json tolerance_json(const TolerancePolicy& tol) {
  Json j;
  j["atol"] = tol.atol;
  j["rtol"] = tol.rtol;
  return j;
}

Json dims_json(const std::vector<std::size_t>& dims) {
  Json j = Json::array();
  for (std::size_t d : dims) j.push_back(d);
  return j;
}

constexpr std::uint64_t kConjVectorTag = 97;

}  // namespace

const char* to_string(HypothesisClass c) {
  switch (c) {
    case HypothesisClass::SelfAdjoint:
      return "selfadjoint";
    case HypothesisClass::Normal:
      return "normal";
    case HypothesisClass::CoHyponormal:
      return "cohypo";
  }
  return "unknown";
}

HypothesisClass hypothesis_class_from_string(const std::string& s) {
  if (s == "selfadjoint") return HypothesisClass::SelfAdjoint;
  if (s == "normal") return HypothesisClass::Normal;
  if (s == "cohypo") return HypothesisClass::CoHyponormal;
  throw ParseError("unknown class '" + s +
                   "' (expected selfadjoint, normal or cohypo)");
}

FuzzReport run_fuzz_campaign(HypothesisClass hypothesis,
                             const FuzzOptions& options) {
  validate_campaign_options(options.trials, options.dims);
  if (options.epsilon < 0.0) {
    throw std::invalid_argument("epsilon must be positive (or 0 for default)");
  }
  const auto start = Clock::now();

  FuzzReport report;
  report.campaign_name = std::string("fuzz-") + to_string(hypothesis);
  report.hypothesis = hypothesis;
  report.dims = options.dims;
  report.trials = options.trials;
  report.seed = options.seed;
  report.epsilon = options.epsilon;
  report.tol = options.tol;
  report.verdicts.reserve(options.trials);

  const bool dump = !options.dump_dir.empty();
  if (dump) {
    std::filesystem::create_directories(options.dump_dir);
  }

  for (std::size_t i = 0; i < options.trials; ++i) {
    GenConfig cfg;
    cfg.dim = options.dims[i % options.dims.size()];
    cfg.seed = mix_seed(options.seed, i);

    TrialRecord rec;
    rec.trial = i;
    rec.seed = cfg.seed;
    rec.dim = cfg.dim;
    try {
      const GeneratedPair pair = draw_pair(hypothesis, cfg);
      const ReidInstance inst =
          make_reid_instance(pair.A, pair.K, options.tol);
      const double eps =
          options.epsilon > 0.0 ? options.epsilon : default_epsilon(inst.M);
      const GapCertificate cert = certify_reid(inst, eps, options.tol);
      rec.status = cert.status;
      rec.gap_upper = cert.gap_upper;
      rec.gap_lower = cert.gap_lower;
      rec.hypothesis_defect = class_defect(hypothesis, inst.M);
      rec.strategy = static_cast<int>(pair.strategy);
      rec.singular_A = pair.singular_A;

      if (dump) {
        const std::filesystem::path dir(options.dump_dir);
        const std::string stem = "trial_" + std::to_string(i);
        write_matrix_file((dir / (stem + "_A.json")).string(), pair.A);
        write_matrix_file((dir / (stem + "_K.json")).string(), pair.K);
      }
    } catch (const Error&) {
      // A trial whose instance cannot even be validated yields no
      // certificate; count it as inconclusive rather than aborting the
      // campaign.
      rec.status = CertStatus::Inconclusive;
    }
    report.verdicts.push_back(rec);

    switch (rec.status) {
      case CertStatus::CertifiedHolds:
        ++report.count_holds;
        break;
      case CertStatus::Violated:
        ++report.count_violated;
        break;
      case CertStatus::Inconclusive:
        ++report.count_inconclusive;
        break;
    }
  }

  report.wall_time_ms = elapsed_ms(start);
  return report;
}

bool all_trials_certified(const FuzzReport& report) {
  return report.count_holds == report.verdicts.size() &&
         report.verdicts.size() == report.trials;
}

Json fuzz_report_to_json(const FuzzReport& report) {
  Json j;
  j["schema_version"] = 1;
  j["campaign_name"] = report.campaign_name;
  j["class"] = to_string(report.hypothesis);
  j["dims"] = dims_json(report.dims);
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["epsilon"] = report.epsilon;  // 0 means per-instance default
  j["tolerance"] = tolerance_json(report.tol);
  Json verdicts = Json::array();
  for (const TrialRecord& rec : report.verdicts) {
    Json r;
    r["trial"] = rec.trial;
    r["seed"] = rec.seed;
    r["dim"] = rec.dim;
    r["status"] = to_string(rec.status);
    r["gap_upper"] = rec.gap_upper;
    r["gap_lower"] = rec.gap_lower;
    r["hypothesis_defect"] = rec.hypothesis_defect;
    r["strategy"] = rec.strategy;
    r["singular_A"] = rec.singular_A;
    verdicts.push_back(std::move(r));
  }
  j["verdicts"] = std::move(verdicts);
  Json summary;
  summary["CERTIFIED_HOLDS"] = report.count_holds;
  summary["VIOLATED"] = report.count_violated;
  summary["INCONCLUSIVE"] = report.count_inconclusive;
  j["summary"] = std::move(summary);
  j["wall_time_ms"] = report.wall_time_ms;
  return j;
}

namespace {

ProofStepResult step_from_certificate(const char* name,
                                      const GapCertificate& cert) {
  ProofStepResult r;
  r.step_name = name;
  r.holds = cert.status == CertStatus::CertifiedHolds;
  r.defect = std::max(0.0, cert.gap_lower);
  r.detail = std::string(to_string(cert.status)) +
             ", gap_upper=" + std::to_string(cert.gap_upper);
  return r;
}

}  // namespace

ProofStepsReport run_proofsteps_campaign(const ProofStepsOptions& options) {
  validate_campaign_options(options.trials, options.dims);
  const auto start = Clock::now();

  ProofStepsReport report;
  report.campaign_name = "proofsteps";
  report.dims = options.dims;
  report.trials = options.trials;
  report.seed = options.seed;
  report.tol = options.tol;
  report.records.reserve(options.trials);

  bool everything_held = true;

  for (std::size_t i = 0; i < options.trials; ++i) {
    GenConfig cfg;
    cfg.dim = options.dims[i % options.dims.size()];
    cfg.seed = mix_seed(options.seed, i);
    const HypothesisClass hypothesis = (i % 2 == 0)
                                           ? HypothesisClass::SelfAdjoint
                                           : HypothesisClass::Normal;

    ProofStepsTrial trial;
    trial.trial = i;
    trial.seed = cfg.seed;
    trial.dim = cfg.dim;
    trial.hypothesis = hypothesis;

    ReidInstance inst;
    try {
      const GeneratedPair pair = draw_pair(hypothesis, cfg);
      inst = make_reid_instance(pair.A, pair.K, options.tol);
    } catch (const Error& e) {
      ProofStepResult r;
      r.step_name = "instance_construction";
      r.holds = false;
      r.detail = std::string("error: ") + e.what();
      trial.steps.push_back(std::move(r));
      trial.all_hold = false;
      everything_held = false;
      report.records.push_back(std::move(trial));
      continue;
    }
    trial.scale = scale_of(inst.M);

    auto run_step = [&trial](const char* name, auto&& body) {
      ProofStepResult r;
      try {
        r = body();
      } catch (const Error& e) {
        r.step_name = name;
        r.holds = false;
        r.defect = 0.0;
        r.detail = std::string("error: ") + e.what();
      }
      trial.steps.push_back(std::move(r));
    };

    run_step("contraction_bound", [&] {
      return check_contraction_bound(inst.K, options.tol);
    });
    run_step("abs_adjoint_identity", [&] {
      return check_abs_adjoint_identity(inst.A, inst.K, options.tol);
    });
    run_step("sqrt_monotone", [&] {
      const ComplexMatrix x = inst.M * adjoint(inst.M);  // A K K* A
      const ComplexMatrix y =
          (inst.c * inst.c) * (inst.A * inst.A);  // ||K||^2 A^2
      return check_sqrt_monotone(x, y, options.tol);
    });
    run_step("abs_domination", [&] {
      return check_abs_domination(inst.A, inst.K, options.tol);
    });
    run_step("conjugation_identity", [&] {
      const ComplexVector x =
          random_unit_vector(cfg.dim, mix_seed(cfg.seed, kConjVectorTag));
      return check_conjugation_identity(inst.A, inst.K, x);
    });
    run_step("kittaneh_adjoint", [&] {
      const ComplexMatrix t = adjoint(inst.M);
      return step_from_certificate(
          "kittaneh_adjoint",
          check_kittaneh(t, default_epsilon(t), options.tol));
    });

    try {
      const GapCertificate final_cert =
          certify_reid(inst, default_epsilon(inst.M), options.tol);
      trial.steps.push_back(
          step_from_certificate("reid_certificate", final_cert));
      trial.final_status = final_cert.status;
    } catch (const Error& e) {
      ProofStepResult r;
      r.step_name = "reid_certificate";
      r.holds = false;
      r.detail = std::string("error: ") + e.what();
      trial.steps.push_back(std::move(r));
      trial.final_status = CertStatus::Inconclusive;
    }

    trial.all_hold = true;
    for (const ProofStepResult& s : trial.steps) {
      trial.all_hold = trial.all_hold && s.holds;
    }
    everything_held = everything_held && trial.all_hold;
    report.records.push_back(std::move(trial));
  }

  // Pinned falsification: the strict Jordan block is not hyponormal and the
  // dominated inequality against its absolute value fails at the classical
  // witness (sqrt(0.9), sqrt(0.1)) with sides exactly 0.3 and 0.1.
  {
    ComplexMatrix t(2, 2);
    t(0, 1) = 1.0;
    ComplexVector x(2);
    x[0] = std::sqrt(0.9);
    x[1] = std::sqrt(0.1);
    report.jordan_lhs = std::abs(quadratic_form(t, x));
    report.jordan_rhs =
        std::real(quadratic_form(absolute_value(t, options.tol), x));
    const GapCertificate cert =
        check_kittaneh(t, default_epsilon(t), options.tol);
    report.jordan_status = cert.status;
    report.jordan_pinned = std::abs(report.jordan_lhs - 0.3) <= 1e-12 &&
                           std::abs(report.jordan_rhs - 0.1) <= 1e-12 &&
                           cert.status == CertStatus::Violated;
  }

  report.all_pass = everything_held && report.jordan_pinned;
  report.wall_time_ms = elapsed_ms(start);
  return report;
}

Json proofsteps_report_to_json(const ProofStepsReport& report) {
  Json j;
  j["schema_version"] = 1;
  j["campaign_name"] = report.campaign_name;
  j["dims"] = dims_json(report.dims);
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["tolerance"] = tolerance_json(report.tol);
  Json records = Json::array();
  std::size_t passing = 0;
  for (const ProofStepsTrial& trial : report.records) {
    Json r;
    r["trial"] = trial.trial;
    r["seed"] = trial.seed;
    r["dim"] = trial.dim;
    r["class"] = to_string(trial.hypothesis);
    r["scale"] = trial.scale;
    Json steps = Json::array();
    for (const ProofStepResult& s : trial.steps) {
      Json sj;
      sj["step"] = s.step_name;
      sj["holds"] = s.holds;
      sj["defect"] = s.defect;
      sj["detail"] = s.detail;
      steps.push_back(std::move(sj));
    }
    r["steps"] = std::move(steps);
    r["final_status"] = to_string(trial.final_status);
    r["all_hold"] = trial.all_hold;
    if (trial.all_hold) ++passing;
    records.push_back(std::move(r));
  }
  j["records"] = std::move(records);
  Json jordan;
  jordan["lhs"] = report.jordan_lhs;
  jordan["rhs"] = report.jordan_rhs;
  jordan["status"] = to_string(report.jordan_status);
  jordan["pinned"] = report.jordan_pinned;
  j["jordan_regression"] = std::move(jordan);
  Json summary;
  summary["trials_passing"] = passing;
  summary["all_pass"] = report.all_pass;
  j["summary"] = std::move(summary);
  j["wall_time_ms"] = report.wall_time_ms;
  return j;
}

}  // namespace reidlab
