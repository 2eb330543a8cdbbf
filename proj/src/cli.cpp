// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#include "reidlab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "reidlab/certifier.hpp"
#include "reidlab/errors.hpp"
#include "reidlab/io.hpp"
#include "reidlab/report.hpp"
#include "reidlab/shift.hpp"
#include "reidlab/tolerance.hpp"

namespace reidlab {

namespace {

std::size_t parse_size(const std::string& text) {
  std::size_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("not a non-negative integer: '" + text + "'");
  }
  return value;
}

void require_dim_in_range(std::size_t d) {
  if (d == 0 || d > 64) {
    throw ParseError("dims must lie in [1, 64], got " + std::to_string(d));
  }
}

TolerancePolicy tolerance_from_flags(double atol, double rtol) {
  if (atol < 0.0 || rtol < 0.0) {
    throw ParseError("atol and rtol must be non-negative");
  }
  TolerancePolicy tol;
  tol.atol = atol;
  tol.rtol = rtol;
  return tol;
}

void require_epsilon_flag(double epsilon) {
  if (epsilon < 0.0) {
    throw ParseError("epsilon must be positive (or omitted for the default)");
  }
}

std::string join_dims(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s;
}

void print_certificate_human(const GapCertificate& cert, std::ostream& out) {
  out << std::setprecision(12);
  out << "status:          " << to_string(cert.status) << "\n";
  out << "gap_upper:       " << cert.gap_upper << "\n";
  out << "gap_lower:       " << cert.gap_lower << "\n";
  out << "theta_star:      " << cert.theta_star << "\n";
  out << "grid_points:     " << cert.grid_points << "\n";
  out << "lipschitz_bound: " << cert.lipschitz_bound << "\n";
  out << "witness:         [";
  for (std::size_t i = 0; i < cert.witness.dim(); ++i) {
    if (i) out << ", ";
    out << "(" << cert.witness[i].real() << ", " << cert.witness[i].imag()
        << ")";
  }
  out << "]\n";
}

}  // namespace

std::vector<std::size_t> parse_dims(const std::string& text) {
  if (text.empty()) {
    throw ParseError("dims must be non-empty");
  }
  std::vector<std::size_t> dims;
  const auto range_pos = text.find("..");
  if (range_pos != std::string::npos) {
    const std::size_t lo = parse_size(text.substr(0, range_pos));
    const std::size_t hi = parse_size(text.substr(range_pos + 2));
    if (lo > hi) {
      throw ParseError("dims range must satisfy a <= b: '" + text + "'");
    }
    require_dim_in_range(lo);
    require_dim_in_range(hi);
    for (std::size_t d = lo; d <= hi; ++d) dims.push_back(d);
    return dims;
  }
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const auto comma = text.find(',', begin);
    const std::string piece = comma == std::string::npos
                                  ? text.substr(begin)
                                  : text.substr(begin, comma - begin);
    const std::size_t d = parse_size(piece);
    require_dim_in_range(d);
    dims.push_back(d);
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return dims;
}

int cmd_check(const CheckCmdOptions& options, std::ostream& out,
              std::ostream& err) {
  GapCertificate cert;
  try {
    const TolerancePolicy tol =
        tolerance_from_flags(options.atol, options.rtol);
    require_epsilon_flag(options.epsilon);
    const ComplexMatrix a = read_matrix_file(options.a_path);
    const ComplexMatrix k = read_matrix_file(options.k_path);
    const ReidInstance inst = make_reid_instance(a, k, tol);
    const double eps =
        options.epsilon > 0.0 ? options.epsilon : default_epsilon(inst.M);
    cert = certify_reid(inst, eps, tol);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (options.human) {
    print_certificate_human(cert, out);
  } else {
    out << certificate_to_json(cert).dump(2) << "\n";
  }
  switch (cert.status) {
    case CertStatus::CertifiedHolds:
      return kExitHolds;
    case CertStatus::Violated:
      return kExitViolated;
    case CertStatus::Inconclusive:
      return kExitInconclusive;
  }
  return kExitUsage;
}

int cmd_fuzz(const FuzzCmdOptions& options, std::ostream& out,
             std::ostream& err) {
  FuzzReport report;
  try {
    const HypothesisClass hypothesis =
        hypothesis_class_from_string(options.hypothesis);
    FuzzOptions fuzz;
    fuzz.dims = parse_dims(options.dims);
    if (options.trials == 0) {
      throw ParseError("trials must be at least 1");
    }
    fuzz.trials = options.trials;
    fuzz.seed = options.seed;
    require_epsilon_flag(options.epsilon);
    fuzz.epsilon = options.epsilon;
    fuzz.tol = tolerance_from_flags(options.atol, options.rtol);
    fuzz.dump_dir = options.dump_dir;
    report = run_fuzz_campaign(hypothesis, fuzz);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (options.human) {
    out << std::setprecision(12);
    out << "campaign:     " << report.campaign_name << "\n";
    out << "dims:         " << join_dims(report.dims) << "\n";
    out << "trials:       " << report.trials << "  seed: " << report.seed
        << "\n";
    out << "summary:      CERTIFIED_HOLDS=" << report.count_holds
        << " VIOLATED=" << report.count_violated
        << " INCONCLUSIVE=" << report.count_inconclusive << "\n";
    double max_upper = 0.0;
    for (const TrialRecord& rec : report.verdicts) {
      max_upper = std::max(max_upper, rec.gap_upper);
    }
    out << "max gap_upper: " << max_upper << "\n";
    for (const TrialRecord& rec : report.verdicts) {
      if (rec.status != CertStatus::CertifiedHolds) {
        out << "  trial " << rec.trial << " (seed " << rec.seed << ", dim "
            << rec.dim << "): " << to_string(rec.status)
            << " gap_lower=" << rec.gap_lower
            << " gap_upper=" << rec.gap_upper << "\n";
      }
    }
    out << "wall_time_ms: " << report.wall_time_ms << "\n";
  } else {
    out << fuzz_report_to_json(report).dump(2) << "\n";
  }
  return all_trials_certified(report) ? kExitHolds : kExitViolated;
}

int cmd_counterexample(const CounterexampleCmdOptions& options,
                       std::ostream& out, std::ostream& err) {
  ViolationReport report;
  try {
    report = counterexample_report(options.n);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const bool exact =
      report.lhs == 2 && report.rhs == 1 && report.gap == 1;
  const bool certifier_agrees =
      report.certificate.status == CertStatus::Violated;

  if (options.human) {
    out << "truncated shift violation (n = " << report.n << ")\n";
    out << "  lhs = |<A K x, x>|   = " << report.lhs << "\n";
    out << "  rhs = ||K|| <A x, x> = " << report.rhs << "\n";
    out << "  gap = lhs - rhs      = " << report.gap << "\n";
    out << std::setprecision(12);
    out << "certifier: " << to_string(report.certificate.status)
        << " (gap_lower=" << report.certificate.gap_lower
        << ", gap_upper=" << report.certificate.gap_upper << ")\n";
  } else {
    Json j;
    j["schema_version"] = 1;
    j["command"] = "counterexample";
    j["n"] = report.n;
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    j["gap"] = report.gap;
    j["exact_match"] = exact;
    j["certificate"] = certificate_to_json(report.certificate);
    out << j.dump(2) << "\n";
  }
  return (exact && certifier_agrees) ? kExitHolds : kExitViolated;
}

int cmd_proofsteps(const ProofStepsCmdOptions& options, std::ostream& out,
                   std::ostream& err) {
  ProofStepsReport report;
  try {
    ProofStepsOptions steps;
    steps.dims = parse_dims(options.dims);
    if (options.trials == 0) {
      throw ParseError("trials must be at least 1");
    }
    steps.trials = options.trials;
    steps.seed = options.seed;
    steps.tol = tolerance_from_flags(options.atol, options.rtol);
    report = run_proofsteps_campaign(steps);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (options.human) {
    out << std::setprecision(12);
    out << "campaign:     " << report.campaign_name << "\n";
    out << "dims:         " << join_dims(report.dims) << "\n";
    out << "trials:       " << report.trials << "  seed: " << report.seed
        << "\n";
    std::size_t passing = 0;
    for (const ProofStepsTrial& trial : report.records) {
      if (trial.all_hold) ++passing;
    }
    out << "steps hold:   " << passing << "/" << report.records.size()
        << " trials\n";
    out << "jordan pin:   lhs=" << report.jordan_lhs
        << " rhs=" << report.jordan_rhs << " status "
        << to_string(report.jordan_status)
        << (report.jordan_pinned ? " (pinned)" : " (NOT pinned)") << "\n";
    for (const ProofStepsTrial& trial : report.records) {
      if (trial.all_hold) continue;
      for (const ProofStepResult& s : trial.steps) {
        if (s.holds) continue;
        out << "  trial " << trial.trial << " (seed " << trial.seed
            << ", dim " << trial.dim << ") step " << s.step_name
            << ": defect=" << s.defect << " " << s.detail << "\n";
      }
    }
    out << "all_pass:     " << (report.all_pass ? "true" : "false") << "\n";
    out << "wall_time_ms: " << report.wall_time_ms << "\n";
  } else {
    out << proofsteps_report_to_json(report).dump(2) << "\n";
  }
  return report.all_pass ? kExitHolds : kExitViolated;
}

}  // namespace reidlab
