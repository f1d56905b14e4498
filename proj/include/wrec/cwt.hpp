// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wrec project contributors

#pragma once

#include "wrec/scale_grid.hpp"
#include "wrec/scalogram.hpp"
#include "wrec/signal.hpp"
#include "wrec/wavelets.hpp"

namespace wrec {

/// Forward transform, frequency-domain path: one spectrum of the signal,
/// then per scale the inverse transform of f^(w) * conj(psi^(a w)) (times
/// sqrt(|a|) for the energy norm). Inherits circular convolution semantics
/// from the grid. Scales are processed in parallel; every row is bitwise
/// independent of the thread count.
Scalogram cwt_forward(const SampledSignal& signal, const WaveletKernel& kernel,
                      const ScaleGrid& grid);

/// Serial reference twin of cwt_forward (same per-row routine, no OpenMP).
Scalogram cwt_forward_serial(const SampledSignal& signal, const WaveletKernel& kernel,
                             const ScaleGrid& grid);

/// Independent oracle: trapezoid quadrature of the defining time-domain
/// integral with the kernel summed over periodic images. Quadratic in N,
/// guarded to N <= 4096 (SizeError beyond). Requires a closed-form kernel.
Scalogram cwt_forward_direct(const SampledSignal& signal, const WaveletKernel& kernel,
                             const ScaleGrid& grid);

}  // namespace wrec
