// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#include "reidlab/shift.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

#include "reidlab/errors.hpp"

namespace reidlab {

namespace {

/// Integer matvec for matrices whose entries are known small integers.
std::vector<std::int64_t> int_matvec(const ComplexMatrix& m,
                                     const std::vector<std::int64_t>& x) {
  std::vector<std::int64_t> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      acc += static_cast<std::int64_t>(m(i, j).real()) * x[j];
    }
    out[i] = acc;
  }
  return out;
}

std::int64_t int_dot(const std::vector<std::int64_t>& u,
                     const std::vector<std::int64_t>& v) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

}  // namespace

ShiftInstance build_shift_instance(std::size_t n) {
  if (n < 2) {
    throw BadDimension("build_shift_instance: need n >= 2");
  }
  ShiftInstance inst;
  inst.n = n;
  inst.S = ComplexMatrix(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    inst.S(i + 1, i) = 1.0;  // S e_i = e_{i+1}
  }
  // S S* is diagonal with integer entries; the product of 0/1 doubles is
  // exact.
  inst.A = inst.S * adjoint(inst.S);
  inst.K = inst.S;
  inst.x_witness = ComplexVector(n);
  inst.x_witness[0] = 2.0;
  inst.x_witness[1] = 1.0;
  return inst;
}

bool verify_shift_product_identity(const ShiftInstance& inst) {
  const ComplexMatrix lhs = inst.S * adjoint(inst.S) * inst.S;
  return exactly_equal(lhs, inst.S);
}

ViolationReport counterexample_report(std::size_t n) {
  const ShiftInstance inst = build_shift_instance(n);

  std::vector<std::int64_t> x(n, 0);
  x[0] = 2;
  x[1] = 1;

  // lhs = |<S x, x>|; all quantities stay integral.
  const std::vector<std::int64_t> sx = int_matvec(inst.S, x);
  const std::int64_t lhs = std::llabs(int_dot(sx, x));

  // ||K||^2 = lambda_max(S* S) and S* S is an integer diagonal matrix, so
  // the norm can be read off exactly instead of estimated.
  const ComplexMatrix sts = adjoint(inst.S) * inst.S;
  std::int64_t norm_k_sq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t entry = static_cast<std::int64_t>(sts(i, j).real());
      if (i != j && entry != 0) {
        throw NumericalFailure("counterexample_report: S* S not diagonal");
      }
      if (i == j && entry > norm_k_sq) norm_k_sq = entry;
    }
  }
  if (norm_k_sq != 1) {
    throw NumericalFailure("counterexample_report: ||S||^2 != 1");
  }

  const std::vector<std::int64_t> ax = int_matvec(inst.A, x);
  const std::int64_t rhs = /*||K|| = 1*/ int_dot(ax, x);

  ViolationReport report;
  report.n = n;
  report.lhs = lhs;
  report.rhs = rhs;
  report.gap = lhs - rhs;

  const ReidInstance reid = make_reid_instance(inst.A, inst.K);
  report.certificate = certify_reid(reid);
  return report;
}

DefectReport shift_hyponormality_defect(const ShiftInstance& inst) {
  return normality_defect(inst.S);
}

}  // namespace reidlab
