// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wrec project contributors

#pragma once

#include <complex>
#include <span>

namespace wrec::fft {

enum class Direction { Forward, Backward };

/// Unnormalized complex DFT. Forward uses the e^{-2*pi*i*mk/N} kernel.
/// Plans are cached per (size, direction) and created deterministically,
/// so repeated calls are bitwise reproducible. Safe to call concurrently.
void dft(std::span<const std::complex<double>> in,
         std::span<std::complex<double>> out, Direction dir);

}  // namespace wrec::fft
