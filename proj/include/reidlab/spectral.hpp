// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "reidlab/matrix.hpp"
#include "reidlab/tolerance.hpp"

namespace reidlab {

/// Eigendecomposition H = V diag(eigenvalues) V* of a Hermitian matrix.
/// Eigenvalues are real and ascending, eigenvector k is column k of
/// eigenvectors.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// scale(M) = max(1, operator norm of M); the reference magnitude used by
/// relative tolerances.
double scale_of(const ComplexMatrix& m);

/// Operator norm ||T|| = sqrt(lambda_max(T* T)), valid for any shape.
double operator_norm(const ComplexMatrix& t);

/// Hermitian eigendecomposition.  Throws NotHermitian if ||H - H*|| exceeds
/// the tolerance floor for H, NumericalFailure if the solver fails or the
/// result violates the unitarity/reconstruction postconditions.
SpectralDecomposition hermitian_eig(const ComplexMatrix& h,
                                    const TolerancePolicy& tol = {});

/// Positive-semidefinite square root.  Eigenvalues in [-floor, 0) are clamped
/// to zero; anything below -floor raises NotPositive.
ComplexMatrix psd_sqrt(const ComplexMatrix& p, const TolerancePolicy& tol = {});

}  // namespace reidlab
