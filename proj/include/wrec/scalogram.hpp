// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wrec project contributors

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "wrec/scale_grid.hpp"
#include "wrec/signal.hpp"
#include "wrec/wavelets.hpp"

namespace wrec {

/// Transform matrix W[scale][translation]. The translation grid coincides
/// with the analyzed signal grid (b_k = x_k). Immutable once built.
struct Scalogram {
  ScaleGrid grid;
  double x0 = 0.0;
  double step = 1.0;
  std::size_t n_translations = 0;
  NormMode norm_mode = NormMode::Amplitude;
  std::string kernel_label;
  std::vector<Complex> values;  // row-major, rows() * n_translations

  std::size_t rows() const { return grid.size(); }
  std::span<Complex> row(std::size_t j) {
    return {values.data() + j * n_translations, n_translations};
  }
  std::span<const Complex> row(std::size_t j) const {
    return {values.data() + j * n_translations, n_translations};
  }
  double b(std::size_t k) const { return x0 + static_cast<double>(k) * step; }

  void validate() const;
};

/// CSV layout: one metadata line, one column-header line, one row per scale
/// with interleaved re/im columns.
void write_scalogram_csv(const Scalogram& sc, std::ostream& os);

/// Compact binary layout "WREC1" (little-endian): magic, u8 version, u8 norm
/// mode, u8 layout, u32 rows, u32 cols, f64 x0, f64 step, f64 scales[rows],
/// f64 weights[rows], then row-major complex pairs as 64-bit floats.
void write_scalogram_wrec1(const Scalogram& sc, std::ostream& os);
Scalogram read_scalogram_wrec1(std::istream& is);

}  // namespace wrec
