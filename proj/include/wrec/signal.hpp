// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wrec project contributors

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace wrec {

using Complex = std::complex<double>;

/// Uniformly sampled complex-valued signal on the grid x_k = x0 + k*step.
///
/// The sample count must be even and at least 4; the even count is what
/// makes the signed-frequency split of the spectrum unambiguous.
struct SampledSignal {
  std::vector<Complex> samples;
  double x0 = 0.0;
  double step = 1.0;

  std::size_t size() const { return samples.size(); }
  double x(std::size_t k) const { return x0 + static_cast<double>(k) * step; }
  double window_length() const { return static_cast<double>(samples.size()) * step; }

  Complex mean() const;
  double norm_l2() const;  // sqrt(h * sum |f_k|^2)

  /// Throws InputDomainError if any invariant fails.
  void validate() const;
};

/// Relative L2 distance ||a - b|| / ||b|| on identical grids.
double rel_l2_distance(const SampledSignal& a, const SampledSignal& b);

}  // namespace wrec
