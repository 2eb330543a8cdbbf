// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace reidlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible for the requested operation.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A matrix required to be Hermitian fails the tolerance-gated symmetry check.
class NotHermitian : public Error {
 public:
  using Error::Error;
};

/// A matrix required to be positive semidefinite has an eigenvalue below the
/// tolerance floor.
class NotPositive : public Error {
 public:
  using Error::Error;
};

/// An iterative numerical routine failed to converge or produced a result
/// that violates its own postconditions.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// A construction was asked for a dimension outside its valid range.
class BadDimension : public Error {
 public:
  using Error::Error;
};

/// A Loewner-order precondition (X <= Y) does not hold.
class OrderViolated : public Error {
 public:
  using Error::Error;
};

/// Input text failed to parse as the expected JSON format.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace reidlab
