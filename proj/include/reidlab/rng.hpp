// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace reidlab {

/// Deterministic random stream.  Built on std::mt19937_64 with hand-rolled
/// output transforms so that identical seeds give bit-identical draws on any
/// conforming platform (the standard pins the engine but not the
/// distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller; the second deviate of each pair is
  /// cached.
  double gaussian();

  /// Complex normal with E|z|^2 = 1.
  std::complex<double> complex_gaussian() {
    const double s = 0.7071067811865476;  // 1/sqrt(2)
    const double re = gaussian();
    const double im = gaussian();
    return {s * re, s * im};
  }

  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Child-stream derivation: mix_seed(s, i) = splitmix64(s + (i+1) * phi64)
/// where phi64 = 0x9E3779B97F4A7C15.  Used wherever one campaign seed has to
/// fan out into independent per-trial or per-component seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace reidlab
