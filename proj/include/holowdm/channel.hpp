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

#include "holowdm/wavenumber.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>

namespace holowdm {

enum class ModelKind { wdm, jakes_sampled, iid_rayleigh };

std::string_view to_string(ModelKind kind);

/// Source and receive correlation matrices of a separable (Kronecker) channel,
/// R = R_s (x) R_r, with cached Hermitian square roots. Immutable once built.
struct CorrelationModel {
    ModelKind kind = ModelKind::iid_rayleigh;
    Eigen::MatrixXcd R_s;
    Eigen::MatrixXcd R_r;
    Eigen::MatrixXcd R_s_sqrt;
    Eigen::MatrixXcd R_r_sqrt;
    bool diagonal = true;  ///< R_s and R_r are diagonal; synthesis scales rows/columns

    Eigen::Index n_s() const noexcept { return R_s.rows(); }
    Eigen::Index n_r() const noexcept { return R_r.rows(); }

    /// Full n_s n_r x n_s n_r covariance of vec(H) (column-stacked): R_s^T (x) R_r.
    Eigen::MatrixXcd kronecker() const;
};

enum class TraceScaling {
    normalized,  ///< tr(R_s) = n_s, tr(R_r) = n_r
    raw,         ///< diagonal entries L sigma^2 exactly as the channel model defines them
};

CorrelationModel build_wdm_correlation(const VarianceProfile& profile_s, const VarianceProfile& profile_r,
                                       double L_s, double L_r,
                                       TraceScaling scaling = TraceScaling::normalized);

/// lambda/2-sampled Jakes model: [R]_{ij} = J0(k (i - j) lambda / 2) on floor(2L/lambda)
/// points per side.
CorrelationModel build_jakes_correlation(const PhysicalConfig& cfg);

CorrelationModel build_iid_correlation(Eigen::Index n_s, Eigen::Index n_r);

struct ChannelRealization {
    Eigen::MatrixXcd H;  ///< n_r x n_s
    std::uint64_t seed = 0;
    ModelKind kind = ModelKind::iid_rayleigh;
    Eigen::VectorXd tx_variances;  ///< diag(R_s), used to rank transmit columns
};

/// H = R_r^{1/2} W R_s^{1/2} with W i.i.d. CN(0, 1), deterministic in `seed`.
ChannelRealization draw_channel(const CorrelationModel& model, std::uint64_t seed);

/// Transmit column order used by simulate_link: descending tx variance, ties to lower index.
std::vector<Eigen::Index> transmit_column_order(const ChannelRealization& channel);

/// y = H[:, first N columns of transmit_column_order] x + z, z ~ CN(0, noise_var I).
Eigen::VectorXcd simulate_link(const ChannelRealization& channel, std::span<const std::complex<double>> x,
                               double noise_var, std::uint64_t seed);

} // namespace holowdm
