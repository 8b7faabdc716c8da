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

#include "holowdm/channel.hpp"

#include "holowdm/errors.hpp"
#include "holowdm/linalg.hpp"
#include "holowdm/random.hpp"
#include "holowdm/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace holowdm {
namespace {

Eigen::MatrixXcd real_diagonal(const Eigen::VectorXd& d) {
    return d.cast<std::complex<double>>().asDiagonal();
}

// Scales R to the requested trace; the square root scales by the square root.
void normalize_trace(Eigen::MatrixXcd& R, Eigen::MatrixXcd& R_sqrt) {
    const double trace = R.trace().real();
    if (!(trace > 0.0)) throw NumericError("correlation matrix has zero trace");
    const double factor = static_cast<double>(R.rows()) / trace;
    R *= factor;
    R_sqrt *= std::sqrt(factor);
}

} // namespace

std::string_view to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::wdm: return "wdm";
    case ModelKind::jakes_sampled: return "jakes_sampled";
    case ModelKind::iid_rayleigh: return "iid_rayleigh";
    }
    return "unknown";
}

Eigen::MatrixXcd CorrelationModel::kronecker() const {
    const Eigen::Index ns = n_s();
    const Eigen::Index nr = n_r();
    Eigen::MatrixXcd out(ns * nr, ns * nr);
    for (Eigen::Index m = 0; m < ns; ++m)
        for (Eigen::Index q = 0; q < ns; ++q)
            out.block(m * nr, q * nr, nr, nr) = R_s(q, m) * R_r;
    return out;
}

CorrelationModel build_wdm_correlation(const VarianceProfile& profile_s, const VarianceProfile& profile_r,
                                       double L_s, double L_r, TraceScaling scaling) {
    if (profile_s.size() == 0 || profile_r.size() == 0)
        throw DomainError("build_wdm_correlation: empty variance profile");
    if (profile_s.indices.size() != profile_s.size() || profile_r.indices.size() != profile_r.size())
        throw DomainError("build_wdm_correlation: profile size does not match its grid");

    const auto sigma_s = scaled_deviations(profile_s, L_s);
    const auto sigma_r = scaled_deviations(profile_r, L_r);
    const Eigen::VectorXd dev_s = Eigen::Map<const Eigen::VectorXd>(sigma_s.data(), sigma_s.size());
    const Eigen::VectorXd dev_r = Eigen::Map<const Eigen::VectorXd>(sigma_r.data(), sigma_r.size());

    CorrelationModel model;
    model.kind = ModelKind::wdm;
    model.diagonal = true;
    model.R_s = real_diagonal(dev_s.cwiseProduct(dev_s));
    model.R_r = real_diagonal(dev_r.cwiseProduct(dev_r));
    model.R_s_sqrt = real_diagonal(dev_s);
    model.R_r_sqrt = real_diagonal(dev_r);
    if (scaling == TraceScaling::normalized) {
        normalize_trace(model.R_s, model.R_s_sqrt);
        normalize_trace(model.R_r, model.R_r_sqrt);
    }
    return model;
}

CorrelationModel build_jakes_correlation(const PhysicalConfig& cfg) {
    const double k = cfg.wavenumber();
    const double spacing = cfg.lambda / 2.0;
    auto toeplitz = [&](Eigen::Index n) {
        Eigen::MatrixXcd R(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                R(i, j) = bessel_j0(k * static_cast<double>(i - j) * spacing);
        return R;
    };

    CorrelationModel model;
    model.kind = ModelKind::jakes_sampled;
    model.diagonal = false;
    model.R_s = toeplitz(static_cast<Eigen::Index>(build_grid(cfg, Side::source).size()));
    model.R_r = toeplitz(static_cast<Eigen::Index>(build_grid(cfg, Side::receiver).size()));
    model.R_s_sqrt = hermitian_sqrt(model.R_s);
    model.R_r_sqrt = hermitian_sqrt(model.R_r);
    normalize_trace(model.R_s, model.R_s_sqrt);
    normalize_trace(model.R_r, model.R_r_sqrt);
    return model;
}

CorrelationModel build_iid_correlation(Eigen::Index n_s, Eigen::Index n_r) {
    if (n_s < 1 || n_r < 1) throw DomainError("build_iid_correlation: sizes must be >= 1");
    CorrelationModel model;
    model.kind = ModelKind::iid_rayleigh;
    model.diagonal = true;
    model.R_s = Eigen::MatrixXcd::Identity(n_s, n_s);
    model.R_r = Eigen::MatrixXcd::Identity(n_r, n_r);
    model.R_s_sqrt = model.R_s;
    model.R_r_sqrt = model.R_r;
    return model;
}

ChannelRealization draw_channel(const CorrelationModel& model, std::uint64_t seed) {
    const Eigen::Index nr = model.n_r();
    const Eigen::Index ns = model.n_s();
    ComplexGaussian gauss(seed);
    Eigen::MatrixXcd W(nr, ns);
    for (Eigen::Index m = 0; m < ns; ++m)
        for (Eigen::Index n = 0; n < nr; ++n) W(n, m) = gauss();

    ChannelRealization out;
    out.seed = seed;
    out.kind = model.kind;
    out.tx_variances = model.R_s.diagonal().real();
    if (model.diagonal) {
        out.H = model.R_r_sqrt.diagonal().asDiagonal() * W * model.R_s_sqrt.diagonal().asDiagonal();
    } else {
        out.H = model.R_r_sqrt * W * model.R_s_sqrt;
    }
    return out;
}

std::vector<Eigen::Index> transmit_column_order(const ChannelRealization& channel) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(channel.H.cols()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    if (channel.tx_variances.size() == channel.H.cols()) {
        std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
            return channel.tx_variances[a] > channel.tx_variances[b];
        });
    }
    return order;
}

Eigen::VectorXcd simulate_link(const ChannelRealization& channel, std::span<const std::complex<double>> x,
                               double noise_var, std::uint64_t seed) {
    const auto streams = static_cast<Eigen::Index>(x.size());
    if (streams > std::min(channel.H.rows(), channel.H.cols()))
        throw DomainError("simulate_link: number of streams exceeds min(n_s, n_r)");
    if (!std::isfinite(noise_var) || noise_var < 0.0)
        throw DomainError("simulate_link: noise variance must be >= 0");
    for (const auto& v : x)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw DomainError("simulate_link: non-finite input symbol");

    const auto order = transmit_column_order(channel);
    Eigen::VectorXcd y = Eigen::VectorXcd::Zero(channel.H.rows());
    for (Eigen::Index j = 0; j < streams; ++j) y += channel.H.col(order[j]) * x[j];

    if (noise_var > 0.0) {
        ComplexGaussian gauss(seed);
        for (Eigen::Index n = 0; n < y.size(); ++n) y[n] += gauss(noise_var);
    }
    return y;
}

} // namespace holowdm
