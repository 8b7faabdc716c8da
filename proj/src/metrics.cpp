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

#include "holowdm/metrics.hpp"

#include "holowdm/errors.hpp"
#include "holowdm/parallel.hpp"
#include "holowdm/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace holowdm {
namespace {

void require_normalized(const VarianceProfile& p, const char* side) {
    if (!p.normalized || std::abs(p.total() - 1.0) > 1e-10)
        throw DomainError(std::string("dof: ") + side + " profile is not normalized to unit sum");
}

} // namespace

std::size_t energy_prefix_count(std::span<const double> values, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("energy_prefix_count: epsilon must lie in (0, 1)");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const double target = 1.0 - epsilon;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        cumulative += sorted[i];
        if (cumulative >= target) return i + 1;
    }
    return sorted.size();
}

DoFResult dof(const VarianceProfile& profile_s, const VarianceProfile& profile_r, double epsilon,
              bool isotropic) {
    require_normalized(profile_s, "source");
    require_normalized(profile_r, "receive");
    DoFResult out;
    out.epsilon = epsilon;
    out.n_s_prime = energy_prefix_count(profile_s.variances, epsilon);
    out.n_r_prime = energy_prefix_count(profile_r.variances, epsilon);
    out.dof = isotropic ? std::min(profile_s.size(), profile_r.size())
                        : std::min(out.n_s_prime, out.n_r_prime);
    return out;
}

std::vector<double> waterfill(std::span<const double> eigenvalues, double total_power, double noise_var) {
    if (!(total_power > 0.0) || !std::isfinite(total_power)) throw DomainError("waterfill: total power must be > 0");
    if (!(noise_var > 0.0) || !std::isfinite(noise_var)) throw DomainError("waterfill: noise variance must be > 0");

    // Positive modes ordered by increasing floor noise / ev.
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        if (eigenvalues[i] < 0.0 || !std::isfinite(eigenvalues[i]))
            throw DomainError("waterfill: eigenvalues must be finite and >= 0");
        if (eigenvalues[i] > 0.0) order.push_back(i);
    }
    if (order.empty()) throw DomainError("waterfill: all eigenvalues are zero");
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return eigenvalues[a] > eigenvalues[b]; });

    std::vector<double> floors(order.size());
    for (std::size_t j = 0; j < order.size(); ++j) floors[j] = noise_var / eigenvalues[order[j]];
    std::vector<double> prefix(order.size() + 1, 0.0);
    for (std::size_t j = 0; j < order.size(); ++j) prefix[j + 1] = prefix[j] + floors[j];

    // With the first `a` modes active the level is (P + sum floors) / a; the
    // set is consistent iff that level exceeds the a-th floor. Consistency is
    // monotone in a, so bisect for the largest consistent a.
    auto level = [&](std::size_t a) { return (total_power + prefix[a]) / static_cast<double>(a); };
    std::size_t lo = 1;
    std::size_t hi = order.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        if (level(mid) > floors[mid - 1])
            lo = mid;
        else
            hi = mid - 1;
    }
    const double mu = level(lo);

    std::vector<double> power(eigenvalues.size(), 0.0);
    for (std::size_t j = 0; j < lo; ++j) power[order[j]] = std::max(0.0, mu - floors[j]);
    return power;
}

double waterfilled_rate(std::span<const double> eigenvalues, double total_power, double noise_var) {
    const auto power = waterfill(eigenvalues, total_power, noise_var);
    double rate = 0.0;
    for (std::size_t i = 0; i < power.size(); ++i)
        if (power[i] > 0.0) rate += std::log2(1.0 + power[i] * eigenvalues[i] / noise_var);
    return rate;
}

double dbw_to_watts(double dbw) { return std::pow(10.0, dbw / 10.0); }

CapacityResult ergodic_capacity(const CorrelationModel& model, std::span<const double> power_grid_dbw,
                                double noise_var, std::size_t realizations, std::uint64_t base_seed) {
    if (realizations < 1) throw DomainError("ergodic_capacity: realizations must be >= 1");
    if (!(noise_var > 0.0)) throw DomainError("ergodic_capacity: noise variance must be > 0");

    const std::size_t points = power_grid_dbw.size();
    const auto modes = static_cast<Eigen::Index>(std::min(model.n_s(), model.n_r()));
    std::vector<double> rates(realizations * points, 0.0);

    parallel_for(realizations, [&](std::size_t r) {
        const auto channel = draw_channel(model, stream_seed(base_seed, r));
        const Eigen::MatrixXcd gram = channel.H * channel.H.adjoint();
        const Eigen::VectorXd ev = hermitian_eigenvalues(gram).head(modes).cwiseMax(0.0);
        const std::span<const double> ev_span(ev.data(), static_cast<std::size_t>(ev.size()));
        for (std::size_t p = 0; p < points; ++p)
            rates[r * points + p] = waterfilled_rate(ev_span, dbw_to_watts(power_grid_dbw[p]), noise_var);
    });

    CapacityResult out;
    out.model_kind = model.kind;
    out.power_grid_dbw.assign(power_grid_dbw.begin(), power_grid_dbw.end());
    out.capacity_bits.assign(points, 0.0);
    out.realizations = realizations;
    for (std::size_t r = 0; r < realizations; ++r)
        for (std::size_t p = 0; p < points; ++p) out.capacity_bits[p] += rates[r * points + p];
    for (double& c : out.capacity_bits) c /= static_cast<double>(realizations);
    return out;
}

} // namespace holowdm
