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

#include "holowdm/harness.hpp"

#include <filesystem>
#include <string_view>

namespace holowdm {

/// Parses a flat JSON document into an ExperimentConfig. Omitted keys keep
/// their ExperimentConfig::defaults() value. Recognized keys:
///   lambda_m, L_s_over_lambda, L_r_over_lambda, d_m, epsilon, noise_var_dbw,
///   power_grid_dbw, realizations, seed, models,
///   clusters         [{mean_deg, circ_var, weight}, ...]  (both sides)
///   clusters_source  same shape, overrides the source side only
/// Throws ConfigError naming the offending key path.
ExperimentConfig parse_config(std::string_view text);

ExperimentConfig load_config(const std::filesystem::path& path);

} // namespace holowdm
