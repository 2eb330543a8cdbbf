// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace reidlab {

/// Absolute/relative tolerance pair used by every comparison in the library.
///
/// A defect d measured against a matrix of scale s (s = max(1, operator norm))
/// is negligible iff |d| <= atol + rtol * s.  All decision boundaries are
/// non-strict: a defect exactly at the floor passes.
struct TolerancePolicy {
  double atol = 1e-10;
  double rtol = 1e-10;

  double floor_for_scale(double scale) const noexcept {
    return atol + rtol * scale;
  }

  bool negligible(double defect, double scale) const noexcept {
    return std::abs(defect) <= floor_for_scale(scale);
  }
};

}  // namespace reidlab
