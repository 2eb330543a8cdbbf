// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#include "reidlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eigen_support.hpp"
#include "reidlab/errors.hpp"
#include "reidlab/predicates.hpp"
#include "reidlab/rng.hpp"
#include "reidlab/spectral.hpp"

namespace reidlab {

namespace {

// Post-construction self-check threshold for generated pairs.
constexpr double kConstructionTol = 1e-8;

// Sub-stream tags.  Each component of a construction draws from its own
// mixed seed so streams stay independent under refactoring.
enum StreamTag : std::uint64_t {
  kTagUnitary = 1,
  kTagSpectrum = 2,
  kTagStrategy = 10,
  kTagPosA = 11,
  kTagTarget = 12,
  kTagSharedBasis = 13,
  kTagDiagonals = 14,
  kTagResample = 99,
};

void validate(const GenConfig& cfg) {
  if (cfg.dim < 1 || cfg.dim > 64) {
    throw BadDimension("GenConfig: dim must be in [1, 64]");
  }
  if (!(cfg.cond_cap > 1.0)) {
    throw std::invalid_argument("GenConfig: cond_cap must exceed 1");
  }
  if (!(cfg.spectrum_scale > 0.0)) {
    throw std::invalid_argument("GenConfig: spectrum_scale must be positive");
  }
}

Eigen::MatrixXcd ginibre_eigen(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXcd g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rng.complex_gaussian();
  return g;
}

Eigen::MatrixXcd haar_unitary_eigen(std::size_t n, std::uint64_t seed) {
  const Eigen::MatrixXcd g = ginibre_eigen(n, seed);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd r = qr.matrixQR();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    const std::complex<double> phase = mag == 0.0 ? 1.0 : d / mag;
    q.col(j) *= phase;
  }
  return q;
}

Eigen::MatrixXcd hermitize(const Eigen::MatrixXcd& m) {
  return 0.5 * (m + m.adjoint());
}

/// Eigenvalues for a positive draw; lowest entry zeroed when the singular
/// coin comes up.  The coin is drawn after the values so the stream layout
/// is identical in both branches.
std::vector<double> positive_spectrum(Rng& rng, const GenConfig& cfg,
                                      bool allow_singular, bool* made_singular) {
  const double lo = cfg.spectrum_scale / cfg.cond_cap;
  const double hi = cfg.spectrum_scale;
  std::vector<double> a(cfg.dim);
  for (double& v : a) v = rng.uniform(lo, hi);
  bool singular = false;
  if (allow_singular) {
    singular = rng.coin();
    if (singular) a[0] = 0.0;
  }
  if (made_singular != nullptr) *made_singular = singular;
  return a;
}

Eigen::MatrixXcd assemble(const Eigen::MatrixXcd& u,
                          const std::vector<double>& diag) {
  Eigen::VectorXd d(static_cast<Eigen::Index>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i)
    d(static_cast<Eigen::Index>(i)) = diag[i];
  return hermitize(u * d.asDiagonal() * u.adjoint());
}

Eigen::MatrixXcd assemble(const Eigen::MatrixXcd& u,
                          const std::vector<std::complex<double>>& diag) {
  Eigen::VectorXcd d(static_cast<Eigen::Index>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i)
    d(static_cast<Eigen::Index>(i)) = diag[i];
  return u * d.asDiagonal() * u.adjoint();
}

enum class TargetClass { SelfAdjoint, Normal };

GeneratedPair build_pair(const GenConfig& cfg, TargetClass target,
                         std::uint64_t seed) {
  const std::size_t n = cfg.dim;
  Rng strategy_rng(mix_seed(seed, kTagStrategy));
  const bool inverse_route = strategy_rng.coin();

  GeneratedPair pair;
  Eigen::MatrixXcd ae;
  Eigen::MatrixXcd ke;

  if (inverse_route) {
    // A strictly positive, K = A^{-1} S; then A K = S lies in the target
    // class by construction up to the solve error.
    GenConfig acfg = cfg;
    acfg.seed = mix_seed(seed, kTagPosA);
    Rng arng(mix_seed(acfg.seed, kTagSpectrum));
    const std::vector<double> avals =
        positive_spectrum(arng, cfg, /*allow_singular=*/false, nullptr);
    const Eigen::MatrixXcd ua =
        haar_unitary_eigen(n, mix_seed(acfg.seed, kTagUnitary));
    ae = assemble(ua, avals);

    Eigen::MatrixXcd s;
    if (target == TargetClass::SelfAdjoint) {
      s = cfg.spectrum_scale *
          hermitize(ginibre_eigen(n, mix_seed(seed, kTagTarget)));
    } else {
      const Eigen::MatrixXcd un =
          haar_unitary_eigen(n, mix_seed(seed, kTagTarget));
      Rng zrng(mix_seed(seed, kTagDiagonals));
      std::vector<std::complex<double>> z(n);
      for (auto& v : z) v = cfg.spectrum_scale * zrng.complex_gaussian();
      s = assemble(un, z);
    }
    ke = Eigen::PartialPivLU<Eigen::MatrixXcd>(ae).solve(s);
    pair.strategy = PairStrategy::InverseSolve;
    pair.singular_A = false;
  } else {
    // A and K share an eigenbasis, so A K is diagonal in it; A may be
    // singular here, which the inverse route cannot produce.
    const Eigen::MatrixXcd u =
        haar_unitary_eigen(n, mix_seed(seed, kTagSharedBasis));
    Rng drng(mix_seed(seed, kTagDiagonals));
    bool singular = false;
    const std::vector<double> avals =
        positive_spectrum(drng, cfg, /*allow_singular=*/true, &singular);
    ae = assemble(u, avals);
    if (target == TargetClass::SelfAdjoint) {
      std::vector<double> k(n);
      for (auto& v : k) v = drng.uniform(-cfg.spectrum_scale, cfg.spectrum_scale);
      ke = assemble(u, k);
    } else {
      std::vector<std::complex<double>> k(n);
      for (auto& v : k) v = cfg.spectrum_scale * drng.complex_gaussian();
      ke = assemble(u, k);
    }
    pair.strategy = PairStrategy::CommutingDiagonal;
    pair.singular_A = singular;
  }

  pair.A = detail::from_eigen(ae);
  pair.K = detail::from_eigen(ke);
  return pair;
}

double selfadjoint_defect(const Eigen::MatrixXcd& ak) {
  return detail::operator_norm_eigen(ak - ak.adjoint());
}

double normality_defect_eigen(const Eigen::MatrixXcd& ak) {
  const Eigen::MatrixXcd d = ak.adjoint() * ak - ak * ak.adjoint();
  const std::vector<double> vals = detail::heev_values(d);
  return std::max(std::abs(vals.front()), std::abs(vals.back()));
}

GeneratedPair generate_checked(const GenConfig& cfg, TargetClass target) {
  validate(cfg);
  std::uint64_t seed = cfg.seed;
  for (int attempt = 0; attempt < 2; ++attempt) {
    GeneratedPair pair = build_pair(cfg, target, seed);
    const Eigen::MatrixXcd ak =
        detail::to_eigen(pair.A) * detail::to_eigen(pair.K);
    const double scale = std::max(1.0, detail::operator_norm_eigen(ak));
    const double defect = target == TargetClass::SelfAdjoint
                              ? selfadjoint_defect(ak)
                              : normality_defect_eigen(ak);
    if (defect <= kConstructionTol * scale) return pair;
    seed = mix_seed(cfg.seed, kTagResample);
  }
  throw NumericalFailure("pair generator: construction self-check failed twice");
}

}  // namespace

ComplexMatrix random_ginibre(const GenConfig& cfg) {
  validate(cfg);
  return detail::from_eigen(ginibre_eigen(cfg.dim, cfg.seed));
}

ComplexMatrix random_unitary(const GenConfig& cfg) {
  validate(cfg);
  return detail::from_eigen(haar_unitary_eigen(cfg.dim, cfg.seed));
}

ComplexMatrix random_positive(const GenConfig& cfg, bool allow_singular) {
  validate(cfg);
  const Eigen::MatrixXcd u =
      haar_unitary_eigen(cfg.dim, mix_seed(cfg.seed, kTagUnitary));
  Rng rng(mix_seed(cfg.seed, kTagSpectrum));
  const std::vector<double> a =
      positive_spectrum(rng, cfg, allow_singular, nullptr);
  return detail::from_eigen(assemble(u, a));
}

GeneratedPair pair_selfadjoint_product(const GenConfig& cfg) {
  GeneratedPair pair = generate_checked(cfg, TargetClass::SelfAdjoint);
  pair.note = pair.strategy == PairStrategy::InverseSolve
                  ? "A K self-adjoint via K = A^{-1} S"
                  : "A K self-adjoint via shared eigenbasis";
  return pair;
}

GeneratedPair pair_normal_product(const GenConfig& cfg) {
  GeneratedPair pair = generate_checked(cfg, TargetClass::Normal);
  pair.note = pair.strategy == PairStrategy::InverseSolve
                  ? "A K normal via K = A^{-1} N"
                  : "A K normal via shared eigenbasis";
  return pair;
}

GeneratedPair pair_cohyponormal_product(const GenConfig& cfg) {
  GeneratedPair pair = pair_normal_product(cfg);
  const ComplexMatrix ak = pair.A * pair.K;
  if (!is_cohyponormal(ak)) {
    throw NumericalFailure(
        "pair_cohyponormal_product: generated product failed the class check");
  }
  pair.note +=
      "; (A K)* hyponormal realized through normality, the only option in "
      "finite dimension";
  return pair;
}

}  // namespace reidlab
