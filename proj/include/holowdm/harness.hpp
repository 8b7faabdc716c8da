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
#include "holowdm/metrics.hpp"
#include "holowdm/scattering.hpp"
#include "holowdm/wavenumber.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace holowdm {

/// Channel models compared in the experiments.
enum class ModelChoice { iid, jakes, wdm_iso, wdm_noniso };

std::string_view to_string(ModelChoice model);
std::optional<ModelChoice> parse_model(std::string_view name);

struct ExperimentConfig {
    PhysicalConfig physical;
    ScatteringSpec scattering_s = ScatteringSpec::isotropic();
    ScatteringSpec scattering_r = ScatteringSpec::isotropic();
    std::vector<ModelChoice> models;
    double epsilon = 0.003;
    std::vector<double> power_grid_dbw;
    std::size_t realizations = 500;
    std::uint64_t seed = 1;
    double noise_var_dbw = 0.0;

    /// 128-wavelength lines at lambda = 1 cm, two vMF clusters at 30 and 60
    /// degrees (circular variances 0.01 and 0.005, equal weights), epsilon = 0.3%,
    /// 0 dBW noise, 0..30 dBW in 5 dB steps, 500 realizations.
    static ExperimentConfig defaults();

    /// The configured mixture (non-isotropic) spec for a side.
    const ScatteringSpec& scattering(Side side) const {
        return side == Side::source ? scattering_s : scattering_r;
    }
};

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Correlation model for one experiment model choice.
CorrelationModel build_model(const ExperimentConfig& cfg, ModelChoice model);

/// PSF on 1024 uniform theta points over [0, pi) for each model that carries
/// an angular spectrum (iid has none and is skipped). Columns: theta_rad,model,psf.
Table run_psf_profile(const ExperimentConfig& cfg);

/// Eigenvalues of R_r / tr(R_r), descending. Columns: index,model,normalized_eigenvalue.
Table run_eigen_spectrum(const ExperimentConfig& cfg);

struct ModelDoF {
    ModelChoice model;
    DoFResult result;
};

std::vector<ModelDoF> run_dof(const ExperimentConfig& cfg);
/// Columns: model,dof,n_s_prime,n_r_prime,epsilon.
Table dof_table(const std::vector<ModelDoF>& results);

struct ModelCapacity {
    ModelChoice model;
    CapacityResult result;
};

std::vector<ModelCapacity> run_capacity(const ExperimentConfig& cfg);
/// Columns: p_dbw,model,capacity_bits_per_s_per_hz.
Table capacity_table(const std::vector<ModelCapacity>& results);

} // namespace holowdm
