// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#include "reidlab/proof_steps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "reidlab/errors.hpp"
#include "reidlab/predicates.hpp"
#include "reidlab/spectral.hpp"

namespace reidlab {

namespace {

// The matrix square root is Hoelder-1/2, not Lipschitz, at singular
// arguments: a kernel eigenvalue computed as p(n) * eps * ||X|| moves the
// root by sqrt(p(n) * eps) * ||sqrt(X)||.  Comparing two independently
// computed roots therefore carries sqrt(eps)-level relative noise near a
// shared kernel — with a dimension factor for the eigensolver's backward
// error — and the comparison floor must include it.  Reconstruction checks
// (squaring the same computed root) are Lipschitz and do not need it.
constexpr double kSqrtConditioningTol = 1.5e-8;  // ~sqrt(machine epsilon)

double sqrt_comparison_floor(double scale, std::size_t n,
                             const TolerancePolicy& tol) {
  return tol.floor_for_scale(scale) +
         kSqrtConditioningTol * static_cast<double>(n) * scale;
}

}  // namespace

ProofStepResult check_contraction_bound(const ComplexMatrix& k,
                                        const TolerancePolicy& tol) {
  if (!k.is_square() || k.empty()) {
    throw DimensionMismatch("check_contraction_bound: K must be square");
  }
  const double c = operator_norm(k);
  const ComplexMatrix x = k * adjoint(k);
  const ComplexMatrix y = (c * c) * ComplexMatrix::identity(k.rows());

  ProofStepResult r;
  r.step_name = "contraction_bound";
  r.defect = loewner_defect(x, y);
  r.holds = loewner_leq(x, y, tol);
  std::ostringstream os;
  os << "lambda_min(||K||^2 I - K K*) >= -" << r.defect;
  r.detail = os.str();
  return r;
}

ProofStepResult check_abs_adjoint_identity(const ComplexMatrix& a,
                                           const ComplexMatrix& k,
                                           const TolerancePolicy& tol) {
  if (a.rows() != k.rows() || a.cols() != k.cols() || !a.is_square()) {
    throw DimensionMismatch("check_abs_adjoint_identity: shapes differ");
  }
  const PositivityResult pos = is_positive(a, tol);
  if (!pos.positive) {
    throw NotPositive("check_abs_adjoint_identity: A is not positive");
  }

  const ComplexMatrix ak = a * k;
  const double c = operator_norm(k);

  // |(A K)*|^2 = (A K)(A K)* = A K K* A.
  const ComplexMatrix target = ak * adjoint(ak);
  const ComplexMatrix b = absolute_value(adjoint(ak), tol);
  const double recon_defect = operator_norm(b * b - target);
  const double scale_t = std::max(1.0, operator_norm(target));
  const bool sub1 = recon_defect <= tol.floor_for_scale(scale_t);

  // A K K* A <= ||K||^2 A^2.
  const ComplexMatrix bound = (c * c) * (a * a);
  const double order_defect = loewner_defect(target, bound);
  const bool sub2 = loewner_leq(target, bound, tol);

  ProofStepResult r;
  r.step_name = "abs_adjoint_identity";
  r.defect = std::max(recon_defect, order_defect);
  r.holds = sub1 && sub2;
  std::ostringstream os;
  os << "|| |(AK)*|^2 - A K K* A || = " << recon_defect
     << "; loewner defect of A K K* A <= ||K||^2 A^2 is " << order_defect;
  r.detail = os.str();
  return r;
}

ProofStepResult check_sqrt_monotone(const ComplexMatrix& x,
                                    const ComplexMatrix& y,
                                    const TolerancePolicy& tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || !x.is_square()) {
    throw DimensionMismatch("check_sqrt_monotone: shapes differ");
  }
  const PositivityResult pos = is_positive(x, tol);
  if (!pos.positive) {
    throw NotPositive("check_sqrt_monotone: X is not positive");
  }
  if (!loewner_leq(x, y, tol)) {
    throw OrderViolated("check_sqrt_monotone: X <= Y fails by " +
                        std::to_string(loewner_defect(x, y)));
  }

  const ComplexMatrix rx = psd_sqrt(x, tol);
  const ComplexMatrix ry = psd_sqrt(y, tol);
  const double scale =
      std::max({1.0, operator_norm(rx), operator_norm(ry)});

  ProofStepResult r;
  r.step_name = "sqrt_monotone";
  r.defect = loewner_defect(rx, ry);
  r.holds = r.defect <= sqrt_comparison_floor(scale, x.rows(), tol);
  std::ostringstream os;
  os << "lambda_min(sqrt(Y) - sqrt(X)) >= -" << r.defect;
  r.detail = os.str();
  return r;
}

ProofStepResult check_abs_domination(const ComplexMatrix& a,
                                     const ComplexMatrix& k,
                                     const TolerancePolicy& tol) {
  if (a.rows() != k.rows() || a.cols() != k.cols() || !a.is_square()) {
    throw DimensionMismatch("check_abs_domination: shapes differ");
  }
  const PositivityResult pos = is_positive(a, tol);
  if (!pos.positive) {
    throw NotPositive("check_abs_domination: A is not positive");
  }

  const ComplexMatrix ak = a * k;
  const double c = operator_norm(k);
  const ComplexMatrix b = absolute_value(adjoint(ak), tol);
  const ComplexMatrix ca = c * a;
  const double scale = std::max({1.0, operator_norm(b), operator_norm(ca)});

  ProofStepResult r;
  r.step_name = "abs_domination";
  r.defect = loewner_defect(b, ca);
  r.holds = r.defect <= sqrt_comparison_floor(scale, a.rows(), tol);
  std::ostringstream os;
  os << "lambda_min(||K|| A - |(A K)*|) >= -" << r.defect;
  r.detail = os.str();
  return r;
}

ProofStepResult check_conjugation_identity(const ComplexMatrix& a,
                                           const ComplexMatrix& k,
                                           const ComplexVector& x) {
  if (a.rows() != k.rows() || a.cols() != k.cols() || !a.is_square()) {
    throw DimensionMismatch("check_conjugation_identity: shapes differ");
  }
  if (x.dim() != a.rows()) {
    throw DimensionMismatch("check_conjugation_identity: vector dim differs");
  }
  const ComplexMatrix ak = a * k;
  const double lhs = std::abs(quadratic_form(ak, x));
  const double rhs = std::abs(quadratic_form(adjoint(ak), x));

  // The two forms are complex conjugates, so they agree up to summation
  // roundoff; the noise term scales that roundoff bound.
  const double xnorm2 = norm(x) * norm(x);
  const double noise = 1e-13 * std::max(1.0, frobenius_norm(ak) * xnorm2);
  const double floor = 1e-12 * std::max(1.0, std::max(lhs, rhs)) + noise;

  ProofStepResult r;
  r.step_name = "conjugation_identity";
  r.defect = std::abs(lhs - rhs);
  r.holds = r.defect <= floor;
  std::ostringstream os;
  os << "| |<AKx,x>| - |<(AK)*x,x>| | = " << r.defect;
  r.detail = os.str();
  return r;
}

GapCertificate check_kittaneh(const ComplexMatrix& t, double epsilon,
                              const TolerancePolicy& tol) {
  if (!t.is_square() || t.empty()) {
    throw DimensionMismatch("check_kittaneh: T must be square");
  }
  const ComplexMatrix abs_t = absolute_value(t, tol);
  return certify_dominated(t, abs_t, epsilon, tol);
}

}  // namespace reidlab
