// SPDX-License-Identifier: Apache-2.0
//
// holowdm: wavenumber-division multiplexed holographic MIMO channel toolkit
// Copyright (C) 2026 The holowdm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <complex>
#include <functional>

namespace holowdm {

/// Adaptive Simpson settings shared by the scattering and wavenumber modules.
struct QuadratureOptions {
    double abs_tol = 1e-10;  ///< absolute tolerance for the whole interval
    int max_depth = 40;      ///< recursion cap per initial panel
    int panels = 16;         ///< uniform pre-split before adapting
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

/// Integrates f over [a, b] with adaptive Simpson and Richardson correction.
/// Never throws on non-convergence; inspect `converged`.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// Complex-valued integrand; real and imaginary parts are integrated
/// separately. `converged` is false if either part failed.
struct ComplexQuadratureResult {
    std::complex<double> value;
    bool converged = true;
};

ComplexQuadratureResult integrate_complex(const std::function<std::complex<double>(double)>& f,
                                          double a, double b, const QuadratureOptions& opts = {});

} // namespace holowdm
