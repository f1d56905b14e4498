// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wrec project contributors

#pragma once

#include "wrec/signal.hpp"
#include "wrec/spectrum.hpp"

namespace wrec {

/// Scaled DFT approximating f^(w) = Int f(x) e^{-iwx} dx:
/// bin_m = step * e^{-i w_m x0} * DFT_m. The phase factor anchors the
/// continuous origin, so translating x0 only rotates bin phases.
Spectrum forward_spectrum(const SampledSignal& signal);

/// Exact inverse of forward_spectrum up to round-off.
SampledSignal inverse_spectrum(const Spectrum& spec);

/// Discrete Hilbert transform: multiplies bin m by -i*sgn(w_m),
/// with sgn taken as 0 at both the DC and the Nyquist bin.
SampledSignal hilbert(const SampledSignal& signal);

/// Zeroes every strictly negative-frequency bin (DC and Nyquist kept).
/// Idempotent; output spectrum is one-sided exactly on the grid.
SampledSignal analytic_projection(const SampledSignal& signal);

/// Fraction of spectral energy in strictly negative bins.
double negative_frequency_energy_fraction(const Spectrum& spec);

/// Spectral derivative (multiplier i*w). Test oracle for the
/// finite-difference scheme; never used inside the reconstruction chain.
SampledSignal spectral_derivative(const SampledSignal& signal);

}  // namespace wrec
