// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wrec project contributors

#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "wrec/scale_grid.hpp"
#include "wrec/signal.hpp"

namespace wrec {

/// Normalization of Eq.-style scaled kernels: amplitude norm keeps unit L1
/// mass (|a|^{-1} scaling), energy norm keeps unit L2 energy (|a|^{-1/2}).
enum class NormMode { Amplitude = 1, Energy = 2 };

enum class KernelKind { Morlet, Gaussian, Tabulated };

/// Analyzing kernel with closed-form (or tabulated) evaluations in time and
/// frequency. Immutable after construction; evaluations are pure.
///
/// Morlet:   psi(x) = C e^{i w0 x} e^{-x^2/2},  psi^(w) = C1 e^{-(w-w0)^2/2}
/// Gaussian: psi(x) = C e^{-c x^2},             psi^(w) = C1 e^{-w^2/(4c)}
///
/// C is fixed by numerical quadrature of the norm condition at construction;
/// C1 follows analytically (C*sqrt(2*pi) for Morlet, C*sqrt(pi/c) for
/// Gaussian). Tabulated kernels are frequency tables with linear
/// interpolation and zero extension; they are rescaled to unit energy for
/// NormMode::Energy and used as given for NormMode::Amplitude.
class WaveletKernel {
 public:
  static WaveletKernel morlet(double omega0, NormMode norm);
  static WaveletKernel gaussian(double c, NormMode norm);
  static WaveletKernel tabulated(std::vector<double> omega,
                                 std::vector<Complex> values, NormMode norm);
  /// CSV columns: omega, Re, [Im]. Header row required, omega strictly increasing.
  static WaveletKernel tabulated_from_csv(const std::string& path, NormMode norm);

  KernelKind kind() const { return kind_; }
  NormMode norm_mode() const { return norm_; }
  double omega0() const { return omega0_; }
  double gaussian_decay() const { return c_; }

  /// Time-domain value. Tabulated kernels throw UnsupportedOperationError.
  Complex time(double x) const;

  /// Frequency-domain value under the e^{-iwx} transform convention.
  Complex freq(double omega) const;

  Complex psi0() const { return psi0_; }        // cached, equals time(0) for closed forms
  double amplitude() const { return c_norm_; }  // C
  double freq_amplitude() const;                // C1 (closed-form kinds only)
  double freq_peak() const { return freq_peak_; }  // max |psi^|

  /// Tabulated band [omega_front, omega_back]; closed forms report the
  /// interval where |psi^| exceeds ~1e-18 of its peak.
  std::array<double, 2> band() const;

  std::string label() const;

 private:
  WaveletKernel() = default;

  KernelKind kind_ = KernelKind::Morlet;
  NormMode norm_ = NormMode::Amplitude;
  double omega0_ = 0.0;  // Morlet
  double c_ = 0.0;       // Gaussian decay
  double c_norm_ = 1.0;  // C
  double c1_ = 1.0;      // C1
  Complex psi0_{0.0, 0.0};
  double freq_peak_ = 1.0;
  std::vector<double> tab_omega_;
  std::vector<Complex> tab_values_;
};

/// Diagnostics around the admissibility constant C_psi = Int |psi^|^2/|w| dw.
struct AdmissibilityReport {
  Complex psi_hat_at_zero{0.0, 0.0};
  double freq_peak = 0.0;
  bool admissible = false;   // verdict: |psi^(0)| <= 1e-12 * peak
  bool divergent = false;    // C_psi diverges (psi^(0) above tolerance, or
                             // the exclusion sequence keeps growing)
  double c_psi = 0.0;        // finite value when !divergent
  std::array<double, 3> exclusion_values{};  // integral at eps = 1e-2, 1e-4, 1e-6
};

/// Computes the report. Throws NumericalError when the kernel looks
/// admissible but the exclusion sequence fails to stabilize.
AdmissibilityReport admissibility(const WaveletKernel& kernel, double quad_tol = 1e-10);

struct CrossAdmissibility {
  Complex value{0.0, 0.0};
  bool divergent = false;
};

/// C_{psi,g} = Int |w|^{-1} conj(psi^(w)) g^(w) dw for a frequency-domain g^.
/// Integrates the symmetrized integrand so odd parts cancel exactly.
CrossAdmissibility cross_admissibility(const WaveletKernel& psi,
                                       const std::function<Complex(double)>& g_hat);

/// Quadrature of Int conj(psi^(a*w)) * w da over the grid. For any w != 0 the
/// exact value is 2*pi*sgn(w)*conj(psi(0)); this is the scale-integral
/// identity the reconstruction chain rests on.
Complex scale_integral(const WaveletKernel& kernel, double omega, const ScaleGrid& grid);

}  // namespace wrec
