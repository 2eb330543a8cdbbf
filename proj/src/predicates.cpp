// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#include "reidlab/predicates.hpp"

#include <algorithm>
#include <cmath>

#include "eigen_support.hpp"
#include "reidlab/errors.hpp"
#include "reidlab/spectral.hpp"

namespace reidlab {

namespace {

void require_square(const ComplexMatrix& m, const char* op) {
  if (!m.is_square() || m.empty()) {
    throw DimensionMismatch(std::string(op) + ": matrix must be square");
  }
}

void require_hermitian(const Eigen::MatrixXcd& m, const TolerancePolicy& tol,
                       const char* op) {
  const double defect = detail::operator_norm_eigen(m - m.adjoint());
  const double scale = std::max(1.0, detail::operator_norm_eigen(m));
  if (defect > tol.floor_for_scale(scale)) {
    throw NotHermitian(std::string(op) + ": operand not Hermitian");
  }
}

}  // namespace

PositivityResult is_positive(const ComplexMatrix& a,
                             const TolerancePolicy& tol) {
  require_square(a, "is_positive");
  const Eigen::MatrixXcd ae = detail::to_eigen(a);
  const double herm_defect = detail::operator_norm_eigen(ae - ae.adjoint());
  const double scale = std::max(1.0, detail::operator_norm_eigen(ae));
  const double floor = tol.floor_for_scale(scale);

  const std::vector<double> vals = detail::heev_values(ae);
  const double lam_min = vals.front();
  const bool positive = herm_defect <= floor && lam_min >= -floor;
  return {positive, lam_min};
}

bool loewner_leq(const ComplexMatrix& x, const ComplexMatrix& y,
                 const TolerancePolicy& tol) {
  require_square(x, "loewner_leq");
  require_square(y, "loewner_leq");
  if (x.rows() != y.rows()) {
    throw DimensionMismatch("loewner_leq: dimensions differ");
  }
  const Eigen::MatrixXcd xe = detail::to_eigen(x);
  const Eigen::MatrixXcd ye = detail::to_eigen(y);
  require_hermitian(xe, tol, "loewner_leq");
  require_hermitian(ye, tol, "loewner_leq");

  const std::vector<double> vals = detail::heev_values(ye - xe);
  const double lam_min = vals.front();
  const double lam_max = vals.back();
  const double scale =
      std::max(1.0, std::max(std::abs(lam_min), std::abs(lam_max)));
  return lam_min >= -tol.floor_for_scale(scale);
}

double loewner_defect(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_square(x, "loewner_defect");
  require_square(y, "loewner_defect");
  if (x.rows() != y.rows()) {
    throw DimensionMismatch("loewner_defect: dimensions differ");
  }
  const Eigen::MatrixXcd d =
      detail::to_eigen(y) - detail::to_eigen(x);
  const std::vector<double> vals = detail::heev_values(d);
  return std::max(0.0, -vals.front());
}

DefectReport normality_defect(const ComplexMatrix& t) {
  require_square(t, "normality_defect");
  const Eigen::MatrixXcd te = detail::to_eigen(t);
  Eigen::MatrixXcd d = te.adjoint() * te - te * te.adjoint();
  d = 0.5 * (d + d.adjoint());

  const std::vector<double> vals = detail::heev_values(d);
  DefectReport report;
  report.defect_matrix = detail::from_eigen(d);
  report.lambda_min = vals.front();
  report.lambda_max = vals.back();
  report.norm = std::max(std::abs(report.lambda_min), std::abs(report.lambda_max));
  return report;
}

bool is_hyponormal(const ComplexMatrix& t, const TolerancePolicy& tol) {
  const DefectReport r = normality_defect(t);
  // The tolerance floor is taken at the scale of the defect matrix itself:
  // class membership should not loosen just because T is large.
  const double scale = std::max(1.0, r.norm);
  return r.lambda_min >= -tol.floor_for_scale(scale);
}

bool is_cohyponormal(const ComplexMatrix& t, const TolerancePolicy& tol) {
  return is_hyponormal(adjoint(t), tol);
}

ComplexMatrix absolute_value(const ComplexMatrix& t,
                             const TolerancePolicy& tol) {
  require_square(t, "absolute_value");
  return psd_sqrt(adjoint(t) * t, tol);
}

}  // namespace reidlab
