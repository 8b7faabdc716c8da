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

#include "holowdm/specfun.hpp"

#include "holowdm/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace holowdm {
namespace {

void require_finite(double x, const char* fn) {
    if (!std::isfinite(x)) throw DomainError(std::string(fn) + ": non-finite argument");
}

void require_nonnegative(double x, const char* fn) {
    require_finite(x, fn);
    if (x < 0.0) throw DomainError(std::string(fn) + ": argument must be >= 0");
}

// Maclaurin series of I_order(x) for order 0 or 1. All terms are positive,
// so there is no cancellation and the relative error stays near machine eps.
double modified_series(int order, double x, double tol) {
    const long double q = static_cast<long double>(x) * x / 4.0L;
    long double term = order == 0 ? 1.0L : static_cast<long double>(x) / 2.0L;
    long double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<long double>(k) * (k + order));
        sum += term;
        if (term <= tol * sum) break;
    }
    return static_cast<double>(sum);
}

// Hankel expansion of e^{-x} I_order(x) for large x.
double modified_asymptotic_scaled(int order, double x, const BesselEvalPolicy& p) {
    const double mu = 4.0 * order * order;
    double term = 1.0;
    double sum = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= p.asymptotic_terms; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (8.0 * k * x);
        if (std::abs(term) >= prev) break;  // divergent tail
        sum += term;
        prev = std::abs(term);
        if (prev <= p.abs_tol * std::abs(sum)) break;
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

double scaled_i(int order, double x, const BesselEvalPolicy& p) {
    if (x < p.series_cutoff_i) return modified_series(order, x, p.abs_tol) * std::exp(-x);
    return modified_asymptotic_scaled(order, x, p);
}

} // namespace

void BesselEvalPolicy::validate() const {
    if (!(series_cutoff_j0 > 0.0) || !(series_cutoff_i > 0.0))
        throw DomainError("BesselEvalPolicy: series cutoffs must be > 0");
    if (!(abs_tol > 0.0)) throw DomainError("BesselEvalPolicy: abs_tol must be > 0");
    if (asymptotic_terms < 1) throw DomainError("BesselEvalPolicy: asymptotic_terms must be >= 1");
}

double bessel_i0e(double x, const BesselEvalPolicy& policy) {
    require_nonnegative(x, "bessel_i0e");
    return scaled_i(0, x, policy);
}

double bessel_i1e(double x, const BesselEvalPolicy& policy) {
    require_nonnegative(x, "bessel_i1e");
    return scaled_i(1, x, policy);
}

// Beyond x ~ 709 the unscaled value overflows to +inf; use the scaled forms.
double bessel_i0(double x, const BesselEvalPolicy& policy) {
    require_nonnegative(x, "bessel_i0");
    if (x < policy.series_cutoff_i) return modified_series(0, x, policy.abs_tol);
    return modified_asymptotic_scaled(0, x, policy) * std::exp(x);
}

double bessel_i1(double x, const BesselEvalPolicy& policy) {
    require_nonnegative(x, "bessel_i1");
    if (x < policy.series_cutoff_i) return modified_series(1, x, policy.abs_tol);
    return modified_asymptotic_scaled(1, x, policy) * std::exp(x);
}

double bessel_ratio_i1_i0(double alpha, const BesselEvalPolicy& policy) {
    require_nonnegative(alpha, "bessel_ratio_i1_i0");
    if (alpha < policy.series_cutoff_i)
        return modified_series(1, alpha, policy.abs_tol) / modified_series(0, alpha, policy.abs_tol);
    return modified_asymptotic_scaled(1, alpha, policy) / modified_asymptotic_scaled(0, alpha, policy);
}

double bessel_j0(double x, const BesselEvalPolicy& policy) {
    require_finite(x, "bessel_j0");
    const double ax = std::abs(x);

    if (ax < policy.series_cutoff_j0) {
        // Alternating series; long double keeps the cancellation error ~1e-13.
        const long double q = static_cast<long double>(ax) * ax / 4.0L;
        long double term = 1.0L;
        long double sum = 1.0L;
        for (int k = 1; k < 200; ++k) {
            term *= -q / (static_cast<long double>(k) * k);
            sum += term;
            if (std::abs(term) < 1e-21L) break;
        }
        return static_cast<double>(sum);
    }

    // J0(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi), chi = x - pi/4.
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= policy.asymptotic_terms; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(odd * odd) / (8.0 * k * ax);
        if (std::abs(term) >= prev) break;
        prev = std::abs(term);
        // Terms alternate between Q (odd k) and P (even k) with period-4 signs.
        switch (k % 4) {
        case 1: q += term; break;
        case 2: p -= term; break;
        case 3: q -= term; break;
        case 0: p += term; break;
        }
        if (prev < policy.abs_tol) break;
    }
    const double chi = ax - std::numbers::pi / 4.0;
    return std::sqrt(2.0 / (std::numbers::pi * ax)) * (p * std::cos(chi) - q * std::sin(chi));
}

double concentration_residual(double alpha, double nu_sq) {
    const double r = bessel_ratio_i1_i0(alpha);
    return (1.0 - r) * (1.0 + r) - nu_sq;
}

double solve_concentration(double nu_sq) {
    if (!std::isfinite(nu_sq) || nu_sq <= 0.0 || nu_sq > 1.0)
        throw DomainError("solve_concentration: circular variance must lie in (0, 1]");
    if (nu_sq == 1.0) return 0.0;

    // alpha -> 1 - ratio(alpha)^2 decreases monotonically from 1 to 0.
    double lo = 0.0;
    double hi = 1.0;
    while (concentration_residual(hi, nu_sq) > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e15) throw NumericError("solve_concentration: failed to bracket root");
    }
    for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (concentration_residual(mid, nu_sq) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double alpha = 0.5 * (lo + hi);
    if (std::abs(concentration_residual(alpha, nu_sq)) > 1e-10)
        throw NumericError("solve_concentration: residual above 1e-10");
    return alpha;
}

} // namespace holowdm
