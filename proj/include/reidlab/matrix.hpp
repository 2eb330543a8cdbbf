// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace reidlab {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage.
///
/// Invariant: entries().size() == rows() * cols().  Entries are expected to be
/// finite; file readers and instance builders enforce this, arithmetic does
/// not re-check it.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> entries);
  static ComplexMatrix diagonal(std::span<const Complex> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) noexcept {
    return data_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  bool all_finite() const noexcept;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Dense complex column vector.
class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim) : data_(dim, Complex{0.0, 0.0}) {}
  explicit ComplexVector(std::vector<Complex> entries)
      : data_(std::move(entries)) {}

  std::size_t dim() const noexcept { return data_.size(); }
  Complex& operator[](std::size_t i) noexcept { return data_[i]; }
  const Complex& operator[](std::size_t i) const noexcept { return data_[i]; }

  std::span<const Complex> entries() const noexcept { return data_; }
  bool all_finite() const noexcept;

 private:
  std::vector<Complex> data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

Complex trace(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
double max_abs_entry(const ComplexMatrix& m);
bool exactly_equal(const ComplexMatrix& a, const ComplexMatrix& b);

/// <u, v> = sum_i conj(v_i) u_i (linear in the first argument).
Complex inner_product(const ComplexVector& u, const ComplexVector& v);

/// <Mx, x> = sum_i conj(x_i) (Mx)_i.
Complex quadratic_form(const ComplexMatrix& m, const ComplexVector& x);

double norm(const ComplexVector& x);
ComplexVector normalized(const ComplexVector& x);

}  // namespace reidlab
