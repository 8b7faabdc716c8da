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

// Bessel functions of order zero and one and the von Mises concentration
// solver. All functions are pure and thread-safe.

namespace holowdm {

/// Evaluation strategy for the Bessel routines. The defaults are what every
/// caller in this library uses; the struct exists so tests can probe the
/// crossover between the Maclaurin series and the Hankel asymptotics.
struct BesselEvalPolicy {
    double series_cutoff_j0 = 17.0;  ///< |x| below this uses the series for J0
    double series_cutoff_i = 15.0;   ///< x below this uses the series for I0/I1
    int asymptotic_terms = 60;       ///< hard cap on asymptotic terms
    double abs_tol = 1e-17;          ///< series/asymptotic term cut-off

    /// Throws DomainError if a field violates its invariant.
    void validate() const;
};

double bessel_i0(double x, const BesselEvalPolicy& policy = {});
double bessel_i1(double x, const BesselEvalPolicy& policy = {});

/// Exponentially scaled forms e^{-x} I0(x), e^{-x} I1(x); finite for any x >= 0.
double bessel_i0e(double x, const BesselEvalPolicy& policy = {});
double bessel_i1e(double x, const BesselEvalPolicy& policy = {});

/// I1(alpha)/I0(alpha) in [0, 1), overflow-free for any finite alpha >= 0.
double bessel_ratio_i1_i0(double alpha, const BesselEvalPolicy& policy = {});

/// J0(x); even in x.
double bessel_j0(double x, const BesselEvalPolicy& policy = {});

/// Solves nu_sq = 1 - (I1(alpha)/I0(alpha))^2 for the vMF concentration alpha.
/// nu_sq must lie in (0, 1]; nu_sq == 1 returns exactly 0.
double solve_concentration(double nu_sq);

/// Residual of the fixed-point equation, 1 - ratio(alpha)^2 - nu_sq.
double concentration_residual(double alpha, double nu_sq);

} // namespace holowdm
