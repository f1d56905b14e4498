// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wrec project contributors

#pragma once

#include <complex>
#include <functional>

namespace wrec {

/// Adaptive Simpson quadrature on [a, b] with absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 48);

std::complex<double> adaptive_simpson_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double tol, int max_depth = 48);

}  // namespace wrec
