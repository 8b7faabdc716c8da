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

#include "holowdm/quadrature.hpp"

#include <complex>
#include <span>
#include <vector>

namespace holowdm {

/// One 2D von Mises-Fisher scattering cluster. The concentration is solved
/// from the circular variance once, at construction.
class Cluster {
public:
    /// mean_angle in radians, [0, pi); circ_variance in (0, 1]; weight > 0.
    Cluster(double weight, double mean_angle, double circ_variance);

    double weight() const noexcept { return weight_; }
    double mean_angle() const noexcept { return mean_angle_; }
    double circ_variance() const noexcept { return circ_variance_; }
    double concentration() const noexcept { return concentration_; }

    /// vMF density exp(a cos(theta - mean)) / (2 pi I0(a)), evaluated in
    /// scaled form so large concentrations do not overflow.
    double density(double theta) const;

    /// Copy with a different mixture weight; the concentration is reused.
    Cluster reweighted(double weight) const;

private:
    Cluster() = default;

    double weight_ = 0.0;
    double mean_angle_ = 0.0;
    double circ_variance_ = 1.0;
    double concentration_ = 0.0;
};

/// Angular power spectral factor: either isotropic (1/pi on [0, pi)) or a
/// vMF mixture with weights summing to one. Immutable.
class ScatteringSpec {
public:
    static ScatteringSpec isotropic();
    /// Weights must sum to 1 within 1e-9; they are rescaled to sum to 1 exactly
    /// (up to rounding) before use.
    static ScatteringSpec mixture(std::vector<Cluster> clusters);

    bool is_isotropic() const noexcept { return clusters_.empty(); }
    std::span<const Cluster> clusters() const noexcept { return clusters_; }

    /// Density without the [0, pi) range check; used by integrators that
    /// touch the closed endpoint theta = pi.
    double density_unchecked(double theta) const;

private:
    explicit ScatteringSpec(std::vector<Cluster> clusters) : clusters_(std::move(clusters)) {}
    std::vector<Cluster> clusters_;
};

/// Normalized PSF value at theta in [0, pi).
double psf_density(const ScatteringSpec& spec, double theta);

/// Receive-side ACF Gamma(r_x) = int_0^pi PSF(theta) e^{j k cos(theta) r_x} dtheta.
/// Isotropic specs return J0(k r_x) in closed form.
std::complex<double> acf(const ScatteringSpec& spec, double k, double r_x);

/// Same integral evaluated by quadrature for every spec, isotropic included.
std::complex<double> acf_by_quadrature(const ScatteringSpec& spec, double k, double r_x,
                                       const QuadratureOptions& opts = {});

/// Wavenumber-domain PSD S(k_x) = 2 pi PSF(arccos(k_x / k)) / sqrt(k^2 - k_x^2)
/// inside the visible region, 0 outside. Returns +infinity at |k_x| == k,
/// where the dispersion factor vanishes; integrate in theta, not k_x.
double psd(const ScatteringSpec& spec, double k, double k_x);

} // namespace holowdm
