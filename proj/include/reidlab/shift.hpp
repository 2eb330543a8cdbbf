// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "reidlab/certifier.hpp"
#include "reidlab/matrix.hpp"
#include "reidlab/predicates.hpp"

namespace reidlab {

/// Truncated unilateral shift instance: S has ones on the first subdiagonal,
/// A = S S* = diag(0, 1, ..., 1), K = S.  A K = S S* S equals S exactly, so
/// the pair has positive A and hyponormal-looking A K while the dominated
/// inequality fails at x = (2, 1, 0, ..., 0).
struct ShiftInstance {
  std::size_t n = 0;
  ComplexMatrix S;
  ComplexMatrix A;  // S S*, exact 0/1 diagonal
  ComplexMatrix K;  // alias of S
  ComplexVector x_witness;  // (2, 1, 0, ..., 0)
};

/// Throws BadDimension if n < 2.
ShiftInstance build_shift_instance(std::size_t n);

/// S S* S == S, checked entry-for-entry in exact arithmetic.
bool verify_shift_product_identity(const ShiftInstance& inst);

/// The violation chain evaluated in integer arithmetic (entries of S and A
/// are 0/1 and the witness is integral), so lhs, rhs and gap are exact:
/// lhs = |<S x, x>| = 2, rhs = ||K|| <A x, x> = 1, gap = 1.  The certificate
/// is the sweep certifier's independent verdict on the same instance.
struct ViolationReport {
  std::size_t n = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::int64_t gap = 0;
  GapCertificate certificate;
};

ViolationReport counterexample_report(std::size_t n);

/// S* S - S S* = diag(1, 0, ..., 0, -1): the truncated shift fails
/// hyponormality with defect eigenvalue -1 at every n >= 2.  (Genuinely
/// hyponormal non-normal operators need infinite dimension; truncation
/// trades hyponormality for an exact violation instance.)
DefectReport shift_hyponormality_defect(const ShiftInstance& inst);

}  // namespace reidlab
