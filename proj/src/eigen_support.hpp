// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

// Internal bridge between the public value types and Eigen.  Not installed.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "reidlab/errors.hpp"
#include "reidlab/matrix.hpp"

namespace reidlab::detail {

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
  ComplexMatrix out(static_cast<std::size_t>(e.rows()),
                    static_cast<std::size_t>(e.cols()));
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
  return out;
}

inline Eigen::VectorXcd to_eigen(const ComplexVector& v) {
  Eigen::VectorXcd out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

inline ComplexVector from_eigen_vec(const Eigen::VectorXcd& e) {
  ComplexVector out(static_cast<std::size_t>(e.size()));
  for (Eigen::Index i = 0; i < e.size(); ++i)
    out[static_cast<std::size_t>(i)] = e(i);
  return out;
}

/// Eigenvalues (ascending) of the Hermitian part (H + H*)/2.  The input is
/// symmetrized first so callers may pass products that are Hermitian only up
/// to roundoff.
inline std::vector<double> heev_values(const Eigen::MatrixXcd& h) {
  Eigen::MatrixXcd hs = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
  solver.compute(hs, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("hermitian eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

struct HeevResult {
  std::vector<double> values;
  Eigen::MatrixXcd vectors;
};

inline HeevResult heev_full(const Eigen::MatrixXcd& h) {
  Eigen::MatrixXcd hs = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
  solver.compute(hs, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("hermitian eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return {std::vector<double>(ev.data(), ev.data() + ev.size()),
          solver.eigenvectors()};
}

inline double operator_norm_eigen(const Eigen::MatrixXcd& t) {
  if (t.size() == 0) return 0.0;
  Eigen::MatrixXcd g = t.adjoint() * t;
  const std::vector<double> vals = heev_values(g);
  const double top = std::max(0.0, vals.back());
  return std::sqrt(top);
}

}  // namespace reidlab::detail
