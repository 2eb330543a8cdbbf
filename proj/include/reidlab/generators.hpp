// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "reidlab/matrix.hpp"

namespace reidlab {

/// Parameters for every random construction.  Identical configs give
/// bit-identical outputs; sub-streams are derived with mix_seed so adding a
/// draw to one component never shifts another.
struct GenConfig {
  std::size_t dim = 4;          // in [1, 64]
  std::uint64_t seed = 0;
  double cond_cap = 1e3;        // > 1, bound on the spectrum spread
  double spectrum_scale = 1.0;  // > 0
};

/// Square matrix with i.i.d. complex standard normal entries (E|z|^2 = 1).
ComplexMatrix random_ginibre(const GenConfig& cfg);

/// Haar-distributed unitary: QR of a Ginibre draw with the R diagonal phases
/// folded into Q.
ComplexMatrix random_unitary(const GenConfig& cfg);

/// Random positive matrix U diag(a) U* with a_i uniform in
/// [spectrum_scale / cond_cap, spectrum_scale].  When allow_singular, the
/// lowest eigenvalue is zeroed with probability 1/2.
ComplexMatrix random_positive(const GenConfig& cfg, bool allow_singular);

enum class PairStrategy {
  InverseSolve = 1,       // K = A^{-1} S for a random target S
  CommutingDiagonal = 2,  // A and K share an eigenbasis; A may be singular
};

/// A generated (A, K) pair together with how it was built.
struct GeneratedPair {
  ComplexMatrix A;
  ComplexMatrix K;
  PairStrategy strategy = PairStrategy::InverseSolve;
  bool singular_A = false;
  std::string note;
};

/// (A, K) with A positive and A K self-adjoint (within the fixed construction
/// tolerance 1e-8 * scale).  One resample on post-check failure, then
/// NumericalFailure.
GeneratedPair pair_selfadjoint_product(const GenConfig& cfg);

/// (A, K) with A positive and A K normal.
GeneratedPair pair_normal_product(const GenConfig& cfg);

/// (A, K) with A positive and (A K)* hyponormal.  In finite dimension the
/// hyponormal and normal classes coincide, so this delegates to
/// pair_normal_product and re-asserts the class membership.
GeneratedPair pair_cohyponormal_product(const GenConfig& cfg);

}  // namespace reidlab
