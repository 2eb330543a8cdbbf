// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "reidlab/matrix.hpp"
#include "reidlab/tolerance.hpp"

namespace reidlab {

/// A dominated-gap instance: positive A, arbitrary K, with the product
/// M = A K and the bound constant c = ||K|| cached at construction.
struct ReidInstance {
  ComplexMatrix A;
  ComplexMatrix K;
  ComplexMatrix M;  // A * K
  double c = 0.0;   // operator norm of K
};

/// Validates dimensions and positivity of A, then caches M and c.
ReidInstance make_reid_instance(const ComplexMatrix& a, const ComplexMatrix& k,
                                const TolerancePolicy& tol = {});

enum class CertStatus { CertifiedHolds, Violated, Inconclusive };

const char* to_string(CertStatus s);

/// Outcome of certify_dominated.
///
/// Semantics: sup over unit x of |<Mx,x>| - <Px,x> lies in
/// [gap_lower, gap_upper].  gap_lower is achieved by the (unit) witness;
/// gap_upper is a rigorous bound derived from the theta sweep.
///   VIOLATED         iff gap_lower >  floor
///   CERTIFIED_HOLDS  iff gap_upper <= floor + epsilon
/// where floor = atol + rtol * max(scale(M), scale(P)); otherwise
/// INCONCLUSIVE.  A CERTIFIED_HOLDS result therefore asserts that the
/// supremum does not exceed the sweep resolution epsilon (plus the floor).
struct GapCertificate {
  CertStatus status = CertStatus::Inconclusive;
  double gap_upper = 0.0;
  double gap_lower = 0.0;
  double theta_star = 0.0;  // in [0, 2*pi)
  ComplexVector witness;    // unit vector
  std::size_t grid_points = 0;   // total gap-function evaluations
  double lipschitz_bound = 0.0;  // ||M||, Lipschitz constant of the sweep
};

struct CertifyOptions {
  double epsilon = 0.0;  // must be > 0
  TolerancePolicy tol{};
  std::size_t eval_cap = 1'000'000;     // hard budget on theta evaluations
  std::size_t coarse_intervals = 256;   // initial uniform grid
  int refine_iters = 60;                // golden-section polish of theta*
};

/// Default sweep resolution: 1e-6 * max(1, ||M||).
double default_epsilon(const ComplexMatrix& m);

/// Pointwise gap |<Mx,x>| - Re<Px,x> at an arbitrary (not necessarily unit)
/// vector.
double pointwise_gap(const ComplexMatrix& m, const ComplexMatrix& p,
                     const ComplexVector& x);

/// |<AKx,x>| - ||K|| <Ax,x> at an arbitrary vector; validates that A is
/// positive.
double reid_gap_at(const ComplexMatrix& a, const ComplexMatrix& k,
                   const ComplexVector& x, const TolerancePolicy& tol = {});

/// lambda_max((e^{i theta} M + e^{-i theta} M*) / 2 - P).
double gap_function_at(const ComplexMatrix& m, const ComplexMatrix& p,
                       double theta, const TolerancePolicy& tol = {});

/// Certifies sup over unit x of |<Mx,x>| - <Px,x> against 0, for Hermitian
/// positive P.  Deterministic; sweeps theta with interval bounds that are
/// sound regardless of refinement depth.
GapCertificate certify_dominated(const ComplexMatrix& m,
                                 const ComplexMatrix& p, double epsilon,
                                 const TolerancePolicy& tol = {});
GapCertificate certify_dominated(const ComplexMatrix& m,
                                 const ComplexMatrix& p,
                                 const CertifyOptions& options);

/// certify_dominated(M = A K, P = ||K|| A).
GapCertificate certify_reid(const ReidInstance& instance, double epsilon,
                            const TolerancePolicy& tol = {});
GapCertificate certify_reid(const ReidInstance& instance);  // default epsilon

/// Independent oracle: evaluates the pointwise gap on seeded random unit
/// vectors, all standard basis vectors, the normalized direction
/// (2,1,0,...,0) and any extra candidates, and returns the best.  Uses no
/// eigensolver.
struct BruteForceResult {
  double gap = 0.0;
  ComplexVector argmax;
};

BruteForceResult brute_force_gap(const ComplexMatrix& m,
                                 const ComplexMatrix& p, std::size_t samples,
                                 std::uint64_t seed,
                                 std::span<const ComplexVector> extra = {});

}  // namespace reidlab
