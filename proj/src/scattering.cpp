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

#include "holowdm/scattering.hpp"

#include "holowdm/errors.hpp"
#include "holowdm/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace holowdm {

using std::numbers::pi;

Cluster::Cluster(double weight, double mean_angle, double circ_variance)
    : weight_(weight), mean_angle_(mean_angle), circ_variance_(circ_variance) {
    if (!std::isfinite(weight) || weight <= 0.0) throw DomainError("Cluster: weight must be > 0");
    if (!std::isfinite(mean_angle) || mean_angle < 0.0 || mean_angle >= pi)
        throw DomainError("Cluster: mean angle must lie in [0, pi)");
    concentration_ = solve_concentration(circ_variance);
}

Cluster Cluster::reweighted(double weight) const {
    if (!std::isfinite(weight) || weight <= 0.0) throw DomainError("Cluster: weight must be > 0");
    Cluster c = *this;
    c.weight_ = weight;
    return c;
}

double Cluster::density(double theta) const {
    // exp(a cos(d)) / (2 pi I0(a)) = exp(a (cos(d) - 1)) / (2 pi e^{-a} I0(a))
    const double a = concentration_;
    return std::exp(a * (std::cos(theta - mean_angle_) - 1.0)) / (2.0 * pi * bessel_i0e(a));
}

ScatteringSpec ScatteringSpec::isotropic() { return ScatteringSpec({}); }

ScatteringSpec ScatteringSpec::mixture(std::vector<Cluster> clusters) {
    if (clusters.empty()) throw DomainError("ScatteringSpec: mixture needs at least one cluster");
    double total = 0.0;
    for (const auto& c : clusters) total += c.weight();
    if (std::abs(total - 1.0) > 1e-9)
        throw DomainError("ScatteringSpec: mixture weights must sum to 1");
    for (auto& c : clusters) c = c.reweighted(c.weight() / total);
    return ScatteringSpec(std::move(clusters));
}

double ScatteringSpec::density_unchecked(double theta) const {
    if (is_isotropic()) return 1.0 / pi;
    double sum = 0.0;
    for (const auto& c : clusters_) sum += c.weight() * c.density(theta);
    return sum;
}

double psf_density(const ScatteringSpec& spec, double theta) {
    if (!(theta >= 0.0 && theta < pi)) throw DomainError("psf_density: theta must lie in [0, pi)");
    return spec.density_unchecked(theta);
}

std::complex<double> acf(const ScatteringSpec& spec, double k, double r_x) {
    if (!std::isfinite(k) || !std::isfinite(r_x)) throw DomainError("acf: non-finite argument");
    if (k <= 0.0) throw DomainError("acf: wavenumber must be > 0");
    if (spec.is_isotropic()) return {bessel_j0(k * r_x), 0.0};
    return acf_by_quadrature(spec, k, r_x, {.abs_tol = 1e-11, .max_depth = 40, .panels = 64});
}

std::complex<double> acf_by_quadrature(const ScatteringSpec& spec, double k, double r_x,
                                       const QuadratureOptions& opts) {
    if (!std::isfinite(k) || !std::isfinite(r_x)) throw DomainError("acf: non-finite argument");
    if (k <= 0.0) throw DomainError("acf: wavenumber must be > 0");
    const double kr = k * r_x;
    const auto res = integrate_complex(
        [&](double theta) {
            const double phase = kr * std::cos(theta);
            return spec.density_unchecked(theta) * std::complex<double>(std::cos(phase), std::sin(phase));
        },
        0.0, pi, opts);
    if (!res.converged) throw NumericError("acf: quadrature did not converge");
    return res.value;
}

double psd(const ScatteringSpec& spec, double k, double k_x) {
    if (!std::isfinite(k) || !std::isfinite(k_x)) throw DomainError("psd: non-finite argument");
    if (k <= 0.0) throw DomainError("psd: wavenumber must be > 0");
    const double a = std::abs(k_x);
    if (a > k) return 0.0;
    if (a == k) return std::numeric_limits<double>::infinity();
    const double gamma = std::sqrt((k - k_x) * (k + k_x));
    return 2.0 * pi * spec.density_unchecked(std::acos(k_x / k)) / gamma;
}

} // namespace holowdm
