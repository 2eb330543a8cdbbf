// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "reidlab/matrix.hpp"
#include "reidlab/tolerance.hpp"

namespace reidlab {

/// Continuous evidence attached to a class-membership question.
/// defect_matrix is Hermitian; norm = max(|lambda_min|, |lambda_max|).
struct DefectReport {
  ComplexMatrix defect_matrix;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double norm = 0.0;
};

struct PositivityResult {
  bool positive = false;
  double lambda_min = 0.0;  // of the Hermitian part, always reported
};

/// True iff A is Hermitian within tol and lambda_min(A) >= -floor.
PositivityResult is_positive(const ComplexMatrix& a,
                             const TolerancePolicy& tol = {});

/// Loewner order: true iff lambda_min(Y - X) >= -floor, where the floor is
/// taken at the scale of the defect matrix Y - X.
bool loewner_leq(const ComplexMatrix& x, const ComplexMatrix& y,
                 const TolerancePolicy& tol = {});

/// max(0, -lambda_min(Y - X)): how far Y - X is from being PSD.
double loewner_defect(const ComplexMatrix& x, const ComplexMatrix& y);

/// T*T - TT*, with its extreme eigenvalues.
DefectReport normality_defect(const ComplexMatrix& t);

/// lambda_min(T*T - TT*) >= -floor at the scale of the defect matrix.
bool is_hyponormal(const ComplexMatrix& t, const TolerancePolicy& tol = {});

/// is_hyponormal(T*).
bool is_cohyponormal(const ComplexMatrix& t, const TolerancePolicy& tol = {});

/// |T| = psd_sqrt(T* T).
ComplexMatrix absolute_value(const ComplexMatrix& t,
                             const TolerancePolicy& tol = {});

}  // namespace reidlab
