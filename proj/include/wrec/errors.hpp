// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wrec project contributors

#pragma once

#include <stdexcept>
#include <string>

namespace wrec {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numeric input outside the documented domain (non-finite samples, bad spacing, ...).
class InputDomainError : public Error {
 public:
  using Error::Error;
};

/// Metadata inconsistent with the data it describes (dims, grids).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for this kernel kind.
class UnsupportedOperationError : public Error {
 public:
  using Error::Error;
};

/// Tabulated kernel band misses every sampled frequency.
class CoverageError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a guarded size limit.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Invalid combination of options (layout, method, norm mode).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Kernel unusable for reconstruction (psi(0) ~ 0).
class DegenerateKernelError : public Error {
 public:
  using Error::Error;
};

/// Kernel fails the admissibility requirement of the classical formula.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// Input violates a stated precondition of the operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Quadrature or other numeric procedure failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// File or stream problem.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace wrec
