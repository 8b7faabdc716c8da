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

#include "holowdm/channel.hpp"
#include "holowdm/linalg.hpp"
#include "holowdm/wavenumber.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace holowdm {

struct DoFResult {
    std::size_t dof = 0;
    std::size_t n_s_prime = 0;  ///< prefix count on the source side
    std::size_t n_r_prime = 0;  ///< prefix count on the receive side
    double epsilon = 0.0;
};

/// Smallest number of the largest entries whose sum reaches 1 - epsilon.
/// `values` must sum to one.
std::size_t energy_prefix_count(std::span<const double> values, double epsilon);

/// Degrees of freedom. Isotropic: min(n_s, n_r). Otherwise the minimum of the
/// two per-side prefix counts. Both prefix counts are always reported.
DoFResult dof(const VarianceProfile& profile_s, const VarianceProfile& profile_r, double epsilon,
              bool isotropic);

/// Water-filling over channel eigenvalues: P_i = max(0, mu - noise / ev_i) with
/// sum P_i = total_power. Any input order is accepted; the allocation is
/// returned aligned with the input.
std::vector<double> waterfill(std::span<const double> eigenvalues, double total_power, double noise_var);

/// Sum_i log2(1 + P_i ev_i / noise) for a water-filled allocation.
double waterfilled_rate(std::span<const double> eigenvalues, double total_power, double noise_var);

struct CapacityResult {
    ModelKind model_kind = ModelKind::iid_rayleigh;
    std::vector<double> power_grid_dbw;
    std::vector<double> capacity_bits;  ///< bit/s/Hz, aligned with power_grid_dbw
    std::size_t realizations = 0;
};

double dbw_to_watts(double dbw);

/// Mean over realizations of the water-filled rate. Realization r uses
/// stream_seed(base_seed, r); the mean accumulates in realization order, so
/// the result does not depend on the worker count.
CapacityResult ergodic_capacity(const CorrelationModel& model, std::span<const double> power_grid_dbw,
                                double noise_var, std::size_t realizations, std::uint64_t base_seed);

} // namespace holowdm
