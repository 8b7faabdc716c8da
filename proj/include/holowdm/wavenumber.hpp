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

#include "holowdm/scattering.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace holowdm {

enum class Side { source, receiver };

const char* to_string(Side side);

/// Geometry of the two parallel line apertures. All lengths in meters.
struct PhysicalConfig {
    double lambda = 0.01;
    double L_s = 1.28;
    double L_r = 1.28;
    double d = 0.0;  ///< separation; carried for completeness, unused by NLoS statistics

    /// k = kappa = 2 pi / lambda.
    double wavenumber() const;
    double length(Side side) const { return side == Side::source ? L_s : L_r; }

    /// Throws DomainError on non-positive lengths or wavelength.
    void validate() const;

    /// Human-readable warnings, e.g. apertures too short for the Fourier-series model.
    std::vector<std::string> warnings() const;
};

/// Dispersion relation sqrt(k^2 - k_x^2) on the visible region |k_x| <= k.
double gamma(double k, double k_x);

struct WavenumberGrid {
    Side side = Side::receiver;
    std::vector<int> indices;  ///< ascending

    std::size_t size() const noexcept { return indices.size(); }
    bool contains(int n) const;
};

/// floor(2L/lambda) integer indices of smallest magnitude with |2 pi m / L| <= k,
/// ties toward negative. For integer L/lambda this is {-L/lambda, ..., L/lambda - 1}.
WavenumberGrid build_grid(const PhysicalConfig& cfg, Side side);

struct AngularInterval {
    double lo;
    double hi;
    double width() const noexcept { return hi - lo; }
};

/// [arccos(lambda (n+1) / L), arccos(lambda n / L)], arguments clamped to [-1, 1].
AngularInterval angular_partition(const PhysicalConfig& cfg, Side side, int n);

/// Per-index variances sigma^2(n); `variances[i]` belongs to `indices[i]`.
struct VarianceProfile {
    Side side = Side::receiver;
    std::vector<int> indices;
    std::vector<double> variances;
    bool normalized = false;

    std::size_t size() const noexcept { return variances.size(); }
    /// Sum in index order.
    double total() const;
    /// Copy divided by total().
    VarianceProfile normalized_copy() const;
};

/// sigma^2(n) = int_{T(n)} PSF(theta) dtheta for every grid index, optionally
/// normalized to unit sum. Partitions are evaluated concurrently.
VarianceProfile variance_profile(const PhysicalConfig& cfg, const ScatteringSpec& spec, Side side,
                                 bool normalize);

/// Scaled standard deviations sqrt(L) sigma(n) that populate the WDM correlation diagonal.
std::vector<double> scaled_deviations(const VarianceProfile& profile, double length);

} // namespace holowdm
