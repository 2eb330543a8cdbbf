// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "reidlab/certifier.hpp"
#include "reidlab/matrix.hpp"
#include "reidlab/tolerance.hpp"

namespace reidlab {

/// One verified link of the inequality's proof chain.
struct ProofStepResult {
  std::string step_name;
  bool holds = false;
  double defect = 0.0;  // distance from the asserted relation
  std::string detail;
};

/// K K* <= ||K||^2 I.
ProofStepResult check_contraction_bound(const ComplexMatrix& k,
                                        const TolerancePolicy& tol = {});

/// Two sub-checks for positive A: |(A K)*|^2 reproduces A K K* A, and
/// A K K* A <= ||K||^2 A^2.
ProofStepResult check_abs_adjoint_identity(const ComplexMatrix& a,
                                           const ComplexMatrix& k,
                                           const TolerancePolicy& tol = {});

/// Square-root monotonicity: requires 0 <= X <= Y (NotPositive /
/// OrderViolated otherwise) and checks sqrt(X) <= sqrt(Y).  The comparison
/// adds a conditioning floor of 1e-8 * scale on top of the tolerance: the
/// matrix square root is Hoelder-1/2 at singular arguments, so two
/// independently computed roots carry sqrt(machine-eps)-level noise.
ProofStepResult check_sqrt_monotone(const ComplexMatrix& x,
                                    const ComplexMatrix& y,
                                    const TolerancePolicy& tol = {});

/// Direct form of the chain's conclusion before the lemma is applied:
/// |(A K)*| <= ||K|| A.  Requires A positive; uses the same square-root
/// conditioning floor as check_sqrt_monotone.
ProofStepResult check_abs_domination(const ComplexMatrix& a,
                                     const ComplexMatrix& k,
                                     const TolerancePolicy& tol = {});

/// |<A K x, x>| equals |<(A K)* x, x>| up to conjugation; verified at 1e-12
/// relative with a floating-point noise floor.
ProofStepResult check_conjugation_identity(const ComplexMatrix& a,
                                           const ComplexMatrix& k,
                                           const ComplexVector& x);

/// Certifies |<T x, x>| <= <|T| x, x> over unit vectors.  Holds whenever T
/// is hyponormal; the strict Jordan block [[0,1],[0,0]] violates it.
GapCertificate check_kittaneh(const ComplexMatrix& t, double epsilon,
                              const TolerancePolicy& tol = {});

}  // namespace reidlab
