// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#include "reidlab/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "eigen_support.hpp"
#include "reidlab/errors.hpp"

namespace reidlab {

namespace {

// Postcondition guards for hermitian_eig.  Frobenius norms bound operator
// norms from above, so these checks are conservative.
constexpr double kUnitaryTol = 1e-12;
constexpr double kReconTol = 1e-12;

}  // namespace

double operator_norm(const ComplexMatrix& t) {
  if (t.empty()) return 0.0;
  return detail::operator_norm_eigen(detail::to_eigen(t));
}

double scale_of(const ComplexMatrix& m) {
  return std::max(1.0, operator_norm(m));
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& h,
                                    const TolerancePolicy& tol) {
  if (!h.is_square()) throw DimensionMismatch("hermitian_eig: not square");
  if (h.empty()) throw DimensionMismatch("hermitian_eig: empty matrix");

  const Eigen::MatrixXcd he = detail::to_eigen(h);
  const double defect = detail::operator_norm_eigen(he - he.adjoint());
  const double scale = std::max(1.0, detail::operator_norm_eigen(he));
  if (defect > tol.floor_for_scale(scale)) {
    throw NotHermitian("hermitian_eig: symmetry defect " +
                       std::to_string(defect) + " exceeds tolerance floor");
  }

  detail::HeevResult r = detail::heev_full(he);
  const Eigen::Index n = he.rows();

  const Eigen::MatrixXcd vtv = r.vectors.adjoint() * r.vectors;
  const double unitary_err =
      (vtv - Eigen::MatrixXcd::Identity(n, n)).norm();
  if (unitary_err > kUnitaryTol) {
    throw NumericalFailure("hermitian_eig: eigenvector basis not unitary");
  }

  Eigen::VectorXd lam(n);
  for (Eigen::Index i = 0; i < n; ++i) lam(i) = r.values[static_cast<std::size_t>(i)];
  const Eigen::MatrixXcd recon =
      r.vectors * lam.asDiagonal() * r.vectors.adjoint();
  const Eigen::MatrixXcd hs = 0.5 * (he + he.adjoint());
  const double recon_err = (recon - hs).norm();
  const double hnorm =
      r.values.empty()
          ? 0.0
          : std::max(std::abs(r.values.front()), std::abs(r.values.back()));
  if (recon_err > kReconTol * std::max(1.0, hnorm)) {
    throw NumericalFailure("hermitian_eig: reconstruction defect too large");
  }

  return {std::move(r.values), detail::from_eigen(r.vectors)};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& p, const TolerancePolicy& tol) {
  SpectralDecomposition sd = hermitian_eig(p, tol);
  const double lam_min = sd.eigenvalues.front();
  const double lam_max = sd.eigenvalues.back();
  const double scale = std::max(1.0, std::max(std::abs(lam_min), std::abs(lam_max)));
  const double floor = tol.floor_for_scale(scale);
  if (lam_min < -floor) {
    throw NotPositive("psd_sqrt: eigenvalue " + std::to_string(lam_min) +
                      " below tolerance floor");
  }

  const std::size_t n = p.rows();
  ComplexMatrix out(n, n);
  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    roots[k] = std::sqrt(std::max(0.0, sd.eigenvalues[k]));
  }
  const ComplexMatrix& v = sd.eigenvectors;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) {
        acc += v(i, k) * roots[k] * std::conj(v(j, k));
      }
      out(i, j) = acc;
    }
  }
  // Exact Hermitian symmetry by construction.
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = Complex{out(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (out(i, j) + std::conj(out(j, i)));
      out(i, j) = avg;
      out(j, i) = std::conj(avg);
    }
  }
  return out;
}

}  // namespace reidlab
