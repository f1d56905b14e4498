// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wrec project contributors

#pragma once

#include <cstddef>
#include <vector>

namespace wrec {

enum class ScaleLayout { PositiveOnly, Mirrored };

/// Discretization of the scale axis with quadrature weights for Int . da.
///
/// Log-spaced midpoint rule: panels of width delta octaves between a_min and
/// a_max, node a_j at each panel midpoint, weight w_j = a_j * delta * ln 2.
/// Mirrored layout prepends the negated branch (scales ascending overall,
/// -a_max ... -a_min, a_min ... a_max) with identical weights.
struct ScaleGrid {
  std::vector<double> scales;
  std::vector<double> weights;
  ScaleLayout layout = ScaleLayout::PositiveOnly;

  std::size_t size() const { return scales.size(); }
  double a_min() const;  // smallest |a|
  double a_max() const;  // largest |a|

  static ScaleGrid log_spaced(double a_min, double a_max, double delta_octaves,
                              ScaleLayout layout);

  /// Analysis default for an (n, step) signal grid: a in [2h, N*h/4],
  /// 1/32 octave steps. Small scales resolve the kernel, large scales keep
  /// its support inside the window.
  static ScaleGrid transform_default(std::size_t n, double step,
                                     ScaleLayout layout = ScaleLayout::PositiveOnly);

  /// Reconstruction default: a in [h/256, 4*N*h], 1/32 octave, mirrored.
  /// Non-admissible kernels carry first-order integrand mass near a = 0 and
  /// the lowest frequency bins need a_max well beyond the analysis range, so
  /// this grid is wider on both ends than the transform default.
  static ScaleGrid inversion_default(std::size_t n, double step);

  /// Throws InputDomainError / StructuralError on invariant violation.
  void validate() const;
};

}  // namespace wrec
