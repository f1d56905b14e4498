// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wrec project contributors

#pragma once

#include <cstddef>
#include <vector>

#include "wrec/signal.hpp"

namespace wrec {

/// Discrete spectrum with explicit angular frequencies, in DFT bin order
/// (0, positive bins up to and including Nyquist, then negative bins).
/// Bin values approximate the continuous transform f^(w) = Int f(x) e^{-iwx} dx.
struct Spectrum {
  std::vector<Complex> bins;
  std::vector<double> omega;  // omega_m = 2*pi*m'/(N*step), signed index m' in (-N/2, N/2]
  double x0 = 0.0;            // grid metadata of the originating signal
  double step = 1.0;

  std::size_t size() const { return bins.size(); }
  double delta_omega() const { return omega.size() > 1 ? omega[1] : 0.0; }

  /// Throws StructuralError when metadata does not match the bin count.
  void validate() const;
};

/// Angular frequency bins for an N-point grid with spacing step,
/// signed index in (-N/2, N/2] so the Nyquist bin is positive.
std::vector<double> angular_frequency_bins(std::size_t n, double step);

}  // namespace wrec
