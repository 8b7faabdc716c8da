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

#include "holowdm/wavenumber.hpp"

#include "holowdm/errors.hpp"
#include "holowdm/parallel.hpp"
#include "holowdm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace holowdm {
namespace {

// 2L/lambda snapped to the nearest integer when within rounding distance, so
// that e.g. 1.28 / 0.01 counts as exactly 128 wavelengths.
double twice_length_in_wavelengths(double length, double lambda) {
    const double x = 2.0 * length / lambda;
    const double r = std::round(x);
    return std::abs(x - r) <= 1e-9 * std::max(1.0, x) ? r : x;
}

} // namespace

const char* to_string(Side side) { return side == Side::source ? "source" : "receiver"; }

double PhysicalConfig::wavenumber() const { return 2.0 * std::numbers::pi / lambda; }

void PhysicalConfig::validate() const {
    if (!std::isfinite(lambda) || lambda <= 0.0) throw DomainError("PhysicalConfig: lambda must be > 0");
    if (!std::isfinite(L_s) || L_s <= 0.0) throw DomainError("PhysicalConfig: L_s must be > 0");
    if (!std::isfinite(L_r) || L_r <= 0.0) throw DomainError("PhysicalConfig: L_r must be > 0");
    if (!std::isfinite(d) || d < 0.0) throw DomainError("PhysicalConfig: d must be >= 0");
}

std::vector<std::string> PhysicalConfig::warnings() const {
    std::vector<std::string> out;
    for (Side side : {Side::source, Side::receiver}) {
        if (length(side) / lambda < 8.0)
            out.push_back(std::string(to_string(side)) +
                          " aperture is shorter than 8 wavelengths; the Fourier-series channel "
                          "model assumes L/lambda >> 1");
    }
    return out;
}

double gamma(double k, double k_x) {
    if (!std::isfinite(k) || !std::isfinite(k_x)) throw DomainError("gamma: non-finite argument");
    if (std::abs(k_x) > k) throw DomainError("gamma: |k_x| > k lies in the evanescent region");
    return std::sqrt((k - k_x) * (k + k_x));
}

bool WavenumberGrid::contains(int n) const {
    return std::binary_search(indices.begin(), indices.end(), n);
}

WavenumberGrid build_grid(const PhysicalConfig& cfg, Side side) {
    cfg.validate();
    const double twice = twice_length_in_wavelengths(cfg.length(side), cfg.lambda);
    const auto count = static_cast<std::size_t>(std::floor(twice));
    if (count == 0)
        throw DomainError("build_grid: aperture shorter than lambda/2 supports no propagating mode");

    // |2 pi m / L| <= k  <=>  |m| <= L / lambda
    const int bound = static_cast<int>(std::floor(twice / 2.0));
    std::vector<int> candidates;
    for (int m = -bound; m <= bound; ++m) candidates.push_back(m);
    std::stable_sort(candidates.begin(), candidates.end(), [](int a, int b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
        return a < b;
    });
    candidates.resize(std::min(count, candidates.size()));
    std::sort(candidates.begin(), candidates.end());
    return {side, std::move(candidates)};
}

AngularInterval angular_partition(const PhysicalConfig& cfg, Side side, int n) {
    const auto grid = build_grid(cfg, side);
    if (!grid.contains(n)) throw DomainError("angular_partition: index " + std::to_string(n) + " outside grid");
    const double step = 2.0 / twice_length_in_wavelengths(cfg.length(side), cfg.lambda);  // lambda / L
    auto clamped_acos = [](double x) { return std::acos(std::clamp(x, -1.0, 1.0)); };
    return {clamped_acos(step * (n + 1)), clamped_acos(step * n)};
}

double VarianceProfile::total() const {
    double sum = 0.0;
    for (double v : variances) sum += v;
    return sum;
}

VarianceProfile VarianceProfile::normalized_copy() const {
    const double sum = total();
    if (!(sum > 0.0)) throw NumericError("VarianceProfile: cannot normalize a zero profile");
    VarianceProfile out = *this;
    for (double& v : out.variances) v /= sum;
    out.normalized = true;
    return out;
}

VarianceProfile variance_profile(const PhysicalConfig& cfg, const ScatteringSpec& spec, Side side,
                                 bool normalize) {
    const auto grid = build_grid(cfg, side);
    VarianceProfile profile{side, grid.indices, std::vector<double>(grid.size(), 0.0), false};
    std::vector<char> converged(grid.size(), 1);

    const QuadratureOptions opts{.abs_tol = 1e-10, .max_depth = 40, .panels = 4};
    parallel_for(grid.size(), [&](std::size_t i) {
        const auto part = angular_partition(cfg, side, grid.indices[i]);
        const auto res =
            integrate([&](double theta) { return spec.density_unchecked(theta); }, part.lo, part.hi, opts);
        profile.variances[i] = std::max(0.0, res.value);
        converged[i] = res.converged ? 1 : 0;
    });
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!converged[i])
            throw NumericError("variance_profile: quadrature did not converge at index " +
                               std::to_string(grid.indices[i]));
    }
    return normalize ? profile.normalized_copy() : profile;
}

std::vector<double> scaled_deviations(const VarianceProfile& profile, double length) {
    if (!(length > 0.0)) throw DomainError("scaled_deviations: length must be > 0");
    std::vector<double> out(profile.size());
    const double root = std::sqrt(length);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = root * std::sqrt(profile.variances[i]);
    return out;
}

} // namespace holowdm
