// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance gate.  Eight checks, one PASS/FAIL line each; the
// process exit code is the number of failing checks.  Every tolerance is
// pinned here, independent of the library's internal settings, so a silent
// loosening inside the library cannot go unnoticed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "reidlab/certifier.hpp"
#include "reidlab/generators.hpp"
#include "reidlab/matrix.hpp"
#include "reidlab/predicates.hpp"
#include "reidlab/proof_steps.hpp"
#include "reidlab/report.hpp"
#include "reidlab/rng.hpp"
#include "reidlab/shift.hpp"
#include "reidlab/spectral.hpp"
#include "reidlab/tolerance.hpp"

using namespace reidlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string format(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  char buf[512];
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return std::string(buf);
}

const std::vector<std::size_t> kDims{2, 3, 4, 5, 6, 7, 8};

GeneratedPair draw(HypothesisClass cls, const GenConfig& cfg) {
  switch (cls) {
    case HypothesisClass::SelfAdjoint:
      return pair_selfadjoint_product(cfg);
    case HypothesisClass::Normal:
      return pair_normal_product(cfg);
    case HypothesisClass::CoHyponormal:
      return pair_cohyponormal_product(cfg);
  }
  return pair_selfadjoint_product(cfg);
}

// ---------------------------------------------------------------------------
// 1. The truncated-shift violation is exact integer arithmetic at every
//    n in {2,...,16}, the sweep certifier independently says VIOLATED, and
//    the whole loop takes under a second.
Outcome criterion_counterexample() {
  const auto t0 = Clock::now();
  for (std::size_t n = 2; n <= 16; ++n) {
    const ViolationReport r = counterexample_report(n);
    if (r.lhs != 2 || r.rhs != 1 || r.gap != 1) {
      return {false, format("n=%zu: chain not exact (lhs=%lld rhs=%lld)", n,
                            static_cast<long long>(r.lhs),
                            static_cast<long long>(r.rhs))};
    }
    if (r.certificate.status != CertStatus::Violated) {
      return {false, format("n=%zu: certifier did not report VIOLATED", n)};
    }
    if (r.certificate.gap_lower <= 0.19) {
      return {false, format("n=%zu: witness gap %.3e implausibly small", n,
                            r.certificate.gap_lower)};
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 1.0) {
    return {false, format("exact at all n but took %.2f s (budget 1 s)", secs)};
  }
  return {true, format("n=2..16 exact (2 > 1, gap 1), all VIOLATED, %.2f s",
                       secs)};
}

// ---------------------------------------------------------------------------
// 2/3. Holding-class campaigns: 500 seeded trials each, every verdict
//      CERTIFIED_HOLDS with gap_upper within 1e-6 * scale(M), where
//      scale(M) = max(1, ||M||) is recomputed here by regenerating the
//      instance from the recorded (dim, seed).  Budget 60 s per class.
Outcome criterion_holds_campaign(HypothesisClass cls) {
  constexpr double kGapBudgetPerScale = 1e-6;
  FuzzOptions opts;
  opts.dims = kDims;
  opts.trials = 500;
  opts.seed = 42;
  const auto t0 = Clock::now();
  const FuzzReport report = run_fuzz_campaign(cls, opts);
  const double secs = seconds_since(t0);

  if (!all_trials_certified(report)) {
    return {false,
            format("%zu/%zu CERTIFIED_HOLDS (violated %zu, inconclusive %zu)",
                   report.count_holds, opts.trials, report.count_violated,
                   report.count_inconclusive)};
  }
  double worst_ratio = 0.0;
  for (const TrialRecord& rec : report.verdicts) {
    GenConfig cfg;
    cfg.dim = rec.dim;
    cfg.seed = rec.seed;
    const GeneratedPair pair = draw(cls, cfg);
    const ReidInstance inst = make_reid_instance(pair.A, pair.K);
    const double budget = kGapBudgetPerScale * scale_of(inst.M);
    worst_ratio = std::max(worst_ratio, rec.gap_upper / budget);
    if (rec.gap_upper > budget) {
      return {false, format("trial %zu: gap_upper %.3e exceeds 1e-6*scale %.3e",
                            rec.trial, rec.gap_upper, budget)};
    }
  }
  if (secs >= 60.0) {
    return {false, format("all certified but took %.1f s (budget 60 s)", secs)};
  }
  return {true, format("500/500 CERTIFIED_HOLDS, max gap_upper at %.2f%% of "
                       "1e-6*scale, %.1f s",
                       100.0 * worst_ratio, secs)};
}

// ---------------------------------------------------------------------------
// 4. Soundness sandwich on 200 mixed instances: a 10^4-sample brute-force
//    search never beats the certified upper bound, and the witness
//    reproduces gap_lower by direct evaluation.
Outcome criterion_sandwich() {
  constexpr double kSlack = 1e-10;
  std::size_t holds = 0;
  std::size_t violated = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t n = kDims[i % kDims.size()];
    const std::uint64_t seed = mix_seed(777, i);
    ComplexMatrix a;
    ComplexMatrix k;
    if (i % 4 == 3) {
      // Unconstrained pair: positive (possibly singular) A, Ginibre K.
      GenConfig ca;
      ca.dim = n;
      ca.seed = mix_seed(seed, 1);
      a = random_positive(ca, /*allow_singular=*/true);
      GenConfig ck;
      ck.dim = n;
      ck.seed = mix_seed(seed, 2);
      k = random_ginibre(ck);
    } else {
      GenConfig cfg;
      cfg.dim = n;
      cfg.seed = seed;
      const HypothesisClass cls = i % 4 == 0   ? HypothesisClass::SelfAdjoint
                                  : i % 4 == 1 ? HypothesisClass::Normal
                                               : HypothesisClass::CoHyponormal;
      const GeneratedPair pair = draw(cls, cfg);
      a = pair.A;
      k = pair.K;
    }
    const ReidInstance inst = make_reid_instance(a, k);
    const ComplexMatrix p = inst.c * inst.A;
    const GapCertificate cert = certify_reid(inst, default_epsilon(inst.M));
    if (cert.status == CertStatus::CertifiedHolds) ++holds;
    if (cert.status == CertStatus::Violated) ++violated;

    const BruteForceResult bf =
        brute_force_gap(inst.M, p, 10000, mix_seed(seed, 3));
    if (bf.gap > cert.gap_upper + kSlack) {
      return {false,
              format("instance %zu: brute force %.6e beats gap_upper %.6e", i,
                     bf.gap, cert.gap_upper)};
    }
    const double at_witness = pointwise_gap(inst.M, p, cert.witness);
    if (std::abs(at_witness - cert.gap_lower) > kSlack) {
      return {false,
              format("instance %zu: witness gap %.6e != gap_lower %.6e", i,
                     at_witness, cert.gap_lower)};
    }
  }
  return {true, format("200 instances (%zu holds, %zu violated): brute force "
                       "<= gap_upper and witness == gap_lower within 1e-10",
                       holds, violated)};
}

// ---------------------------------------------------------------------------
// 5. Proof-chain coherence over 200 instances: every step holds, every
//    per-step defect is within 1e-8 * scale with
//    scale = dim * max(1, ||M||, ||K||*||A||), and the final certificate is
//    CERTIFIED_HOLDS on every trial.
Outcome criterion_proof_chain() {
  constexpr double kStepBudgetPerScale = 1e-8;
  ProofStepsOptions opts;
  opts.dims = kDims;
  opts.trials = 200;
  opts.seed = 4242;
  const ProofStepsReport report = run_proofsteps_campaign(opts);
  if (!report.jordan_pinned) {
    return {false, "pinned Jordan falsification did not reproduce"};
  }
  double worst_ratio = 0.0;
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const ProofStepsTrial& trial = report.records[i];
    if (!trial.all_hold) {
      std::string bad = "?";
      for (const ProofStepResult& s : trial.steps) {
        if (!s.holds) {
          bad = s.step_name;
          break;
        }
      }
      return {false, format("trial %zu: step %s failed", i, bad.c_str())};
    }
    if (trial.final_status != CertStatus::CertifiedHolds) {
      return {false, format("trial %zu: final certificate not HOLDS", i)};
    }
    // Re-derive the instance to measure defects against a scale computed
    // independently of the campaign's bookkeeping.
    GenConfig cfg;
    cfg.dim = trial.dim;
    cfg.seed = trial.seed;
    const HypothesisClass cls = (i % 2 == 0) ? HypothesisClass::SelfAdjoint
                                             : HypothesisClass::Normal;
    const GeneratedPair pair = draw(cls, cfg);
    const ReidInstance inst = make_reid_instance(pair.A, pair.K);
    const double base = std::max(
        {1.0, operator_norm(inst.M), inst.c * operator_norm(inst.A)});
    const double budget =
        kStepBudgetPerScale * static_cast<double>(trial.dim) * base;
    for (const ProofStepResult& s : trial.steps) {
      worst_ratio = std::max(worst_ratio, s.defect / budget);
      if (s.defect > budget) {
        return {false,
                format("trial %zu step %s: defect %.3e exceeds %.3e", i,
                       s.step_name.c_str(), s.defect, budget)};
      }
    }
  }
  return {true, format("200/200 chains hold end-to-end, max step defect at "
                       "%.2f%% of 1e-8*scale, Jordan pinned",
                       100.0 * worst_ratio)};
}

// ---------------------------------------------------------------------------
// 6. Square-root monotonicity: 1000 seeded pairs 0 <= X <= Y at dims 2..8,
//    lambda_min(sqrt(Y) - sqrt(X)) >= -1e-8 * scale with
//    scale = dim * max(1, ||sqrt(Y)||).  X is frequently singular, which is
//    the conditioning-hostile case.
Outcome criterion_sqrt_monotone() {
  constexpr double kBudgetPerScale = 1e-8;
  double worst_ratio = 0.0;
  std::size_t singular = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    const std::size_t n = kDims[i % kDims.size()];
    const std::uint64_t seed = mix_seed(9001, i);
    GenConfig cx;
    cx.dim = n;
    cx.seed = mix_seed(seed, 1);
    const ComplexMatrix x = random_positive(cx, /*allow_singular=*/true);
    GenConfig cg;
    cg.dim = n;
    cg.seed = mix_seed(seed, 2);
    const ComplexMatrix g = random_ginibre(cg);
    const ComplexMatrix y = x + g * adjoint(g);

    const ComplexMatrix rx = psd_sqrt(x);
    const ComplexMatrix ry = psd_sqrt(y);
    const double defect = loewner_defect(rx, ry);
    const double budget = kBudgetPerScale * static_cast<double>(n) *
                          std::max(1.0, operator_norm(ry));
    worst_ratio = std::max(worst_ratio, defect / budget);
    if (defect > budget) {
      return {false, format("pair %zu (dim %zu): lambda_min(sqrt(Y)-sqrt(X)) "
                            "= -%.3e below -%.3e",
                            i, n, defect, budget)};
    }
    if (hermitian_eig(x).eigenvalues.front() < 1e-6) ++singular;
  }
  return {true,
          format("1000/1000 ordered pairs monotone (%zu singular X), max "
                 "defect at %.2f%% of 1e-8*scale",
                 singular, 100.0 * worst_ratio)};
}

// ---------------------------------------------------------------------------
// 7. The strict Jordan block falsifies pointwise domination by |T| at the
//    classical witness with sides exactly 0.3 and 0.1.
Outcome criterion_jordan() {
  ComplexMatrix t(2, 2);
  t(0, 1) = 1.0;
  ComplexVector x(2);
  x[0] = std::sqrt(0.9);
  x[1] = std::sqrt(0.1);
  const double lhs = std::abs(quadratic_form(t, x));
  const double rhs = std::real(quadratic_form(absolute_value(t), x));
  if (std::abs(lhs - 0.3) > 1e-12 || std::abs(rhs - 0.1) > 1e-12) {
    return {false,
            format("witness sides %.15f / %.15f not 0.3 / 0.1", lhs, rhs)};
  }
  const GapCertificate cert = check_kittaneh(t, default_epsilon(t));
  if (cert.status != CertStatus::Violated) {
    return {false, "certifier failed to flag the Jordan block"};
  }
  return {true, format("|<Tx,x>| = %.12f > <|T|x,x> = %.12f (within 1e-12), "
                       "certifier VIOLATED",
                       lhs, rhs)};
}

// ---------------------------------------------------------------------------
// 8. Finite-dimensional collapse of hyponormality: the commutator
//    T*T - TT* is traceless to rounding for 200 random matrices, and any
//    matrix accepted as hyponormal at tolerance t has defect norm at most
//    (n-1) * floor(t) (tracelessness forces near-normality).
Outcome criterion_collapse() {
  double worst_trace = 0.0;
  for (std::size_t i = 0; i < 200; ++i) {
    GenConfig cfg;
    cfg.dim = kDims[i % kDims.size()];
    cfg.seed = mix_seed(31415, i);
    const ComplexMatrix t = random_ginibre(cfg);
    const DefectReport d = normality_defect(t);
    const double fro = frobenius_norm(t);
    const double scale = std::max(1.0, fro * fro);
    const double tr = std::abs(trace(d.defect_matrix));
    worst_trace = std::max(worst_trace, tr / (1e-12 * scale));
    if (tr > 1e-12 * scale) {
      return {false, format("matrix %zu: |trace(T*T-TT*)| = %.3e at scale "
                            "%.3e",
                            i, tr, scale)};
    }
  }

  // Near-normal suite: exactly normal, and normal plus perturbations sized
  // to pass at the default (1e-10) and loose (1e-6) tolerances.
  const TolerancePolicy tight;  // default: atol = rtol = 1e-10
  TolerancePolicy loose;
  loose.atol = 1e-6;
  loose.rtol = 1e-6;
  std::size_t accepted = 0;
  for (std::size_t i = 0; i < 84; ++i) {
    const std::size_t n = kDims[i % kDims.size()];
    const std::uint64_t seed = mix_seed(2718, i);
    GenConfig ucfg;
    ucfg.dim = n;
    ucfg.seed = mix_seed(seed, 1);
    const ComplexMatrix u = random_unitary(ucfg);
    Rng zrng(mix_seed(seed, 2));
    std::vector<Complex> z(n);
    for (auto& v : z) v = 2.0 * zrng.complex_gaussian();
    const ComplexMatrix normal = u * ComplexMatrix::diagonal(z) * adjoint(u);

    const double delta = (i % 3 == 0) ? 0.0 : (i % 3 == 1) ? 1e-13 : 1e-9;
    GenConfig gcfg;
    gcfg.dim = n;
    gcfg.seed = mix_seed(seed, 3);
    const ComplexMatrix t = (delta == 0.0)
                                ? normal
                                : normal + delta * random_ginibre(gcfg);

    for (const TolerancePolicy& tol : {tight, loose}) {
      if (!is_hyponormal(t, tol)) continue;
      ++accepted;
      const DefectReport d = normality_defect(t);
      const double floor = tol.floor_for_scale(scale_of(d.defect_matrix));
      const double fro = frobenius_norm(t);
      const double trace_noise = 1e-12 * std::max(1.0, fro * fro);
      const double bound =
          static_cast<double>(n - 1) * floor + trace_noise;
      if (d.norm > bound) {
        return {false,
                format("suite %zu: accepted hyponormal but defect %.3e > "
                       "(n-1)*floor %.3e",
                       i, d.norm, bound)};
      }
    }
  }
  if (accepted < 84) {
    return {false, format("only %zu hyponormal acceptances; suite "
                          "construction broken",
                          accepted)};
  }
  return {true, format("200 commutators traceless (worst at %.2f%% of "
                       "1e-12*scale); %zu accepted hyponormals all obey the "
                       "(n-1)*floor defect bound",
                       100.0 * worst_trace, accepted)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"counterexample-exactness", criterion_counterexample},
      {"selfadjoint-campaign",
       [] { return criterion_holds_campaign(HypothesisClass::SelfAdjoint); }},
      {"normal-and-cohypo-campaigns",
       [] {
         const Outcome normal =
             criterion_holds_campaign(HypothesisClass::Normal);
         if (!normal.pass) return normal;
         const Outcome cohypo =
             criterion_holds_campaign(HypothesisClass::CoHyponormal);
         if (!cohypo.pass) return cohypo;
         return Outcome{true, "normal: " + normal.detail +
                                  " | cohypo: " + cohypo.detail};
       }},
      {"certifier-soundness-sandwich", criterion_sandwich},
      {"proof-chain-coherence", criterion_proof_chain},
      {"sqrt-operator-monotonicity", criterion_sqrt_monotone},
      {"jordan-block-falsification", criterion_jordan},
      {"finite-dimensional-collapse", criterion_collapse},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("unexpected exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s  %d %s: %s\n", outcome.pass ? "PASS" : "FAIL", index,
                c.name, outcome.detail.c_str());
  }
  std::printf("%d/8 acceptance checks passed\n", 8 - failures);
  return failures;
}
