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

#include "holowdm/harness.hpp"

#include "holowdm/errors.hpp"
#include "holowdm/linalg.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace holowdm {
namespace {

constexpr std::size_t kPsfGridPoints = 1024;

const ScatteringSpec& spec_for(const ExperimentConfig& cfg, ModelChoice model, Side side) {
    static const ScatteringSpec iso = ScatteringSpec::isotropic();
    return model == ModelChoice::wdm_noniso ? cfg.scattering(side) : iso;
}

// Descending eigenvalues of R / tr(R), packaged as a normalized profile so the
// DoF prefix rule applies to any correlation model.
VarianceProfile spectrum_profile(const Eigen::MatrixXcd& R, Side side) {
    const Eigen::VectorXd ev = hermitian_eigenvalues(R).cwiseMax(0.0);
    VarianceProfile p;
    p.side = side;
    p.indices.resize(static_cast<std::size_t>(ev.size()));
    std::iota(p.indices.begin(), p.indices.end(), 0);
    p.variances.assign(ev.data(), ev.data() + ev.size());
    return p.normalized_copy();
}

} // namespace

std::string_view to_string(ModelChoice model) {
    switch (model) {
    case ModelChoice::iid: return "iid";
    case ModelChoice::jakes: return "jakes";
    case ModelChoice::wdm_iso: return "wdm_iso";
    case ModelChoice::wdm_noniso: return "wdm_noniso";
    }
    return "unknown";
}

std::optional<ModelChoice> parse_model(std::string_view name) {
    for (auto m : {ModelChoice::iid, ModelChoice::jakes, ModelChoice::wdm_iso, ModelChoice::wdm_noniso})
        if (to_string(m) == name) return m;
    return std::nullopt;
}

ExperimentConfig ExperimentConfig::defaults() {
    constexpr double deg = std::numbers::pi / 180.0;
    ExperimentConfig cfg;
    cfg.physical = PhysicalConfig{.lambda = 0.01, .L_s = 128 * 0.01, .L_r = 128 * 0.01, .d = 0.0};
    const auto mixture = ScatteringSpec::mixture({Cluster(0.5, 30 * deg, 0.01), Cluster(0.5, 60 * deg, 0.005)});
    cfg.scattering_s = mixture;
    cfg.scattering_r = mixture;
    cfg.models = {ModelChoice::iid, ModelChoice::jakes, ModelChoice::wdm_iso, ModelChoice::wdm_noniso};
    cfg.epsilon = 0.003;
    cfg.power_grid_dbw = {0, 5, 10, 15, 20, 25, 30};
    cfg.realizations = 500;
    cfg.seed = 1;
    cfg.noise_var_dbw = 0.0;
    return cfg;
}

CorrelationModel build_model(const ExperimentConfig& cfg, ModelChoice model) {
    const auto& phys = cfg.physical;
    switch (model) {
    case ModelChoice::iid:
        return build_iid_correlation(static_cast<Eigen::Index>(build_grid(phys, Side::source).size()),
                                     static_cast<Eigen::Index>(build_grid(phys, Side::receiver).size()));
    case ModelChoice::jakes:
        return build_jakes_correlation(phys);
    case ModelChoice::wdm_iso:
    case ModelChoice::wdm_noniso: {
        const auto ps = variance_profile(phys, spec_for(cfg, model, Side::source), Side::source, true);
        const auto pr = variance_profile(phys, spec_for(cfg, model, Side::receiver), Side::receiver, true);
        return build_wdm_correlation(ps, pr, phys.L_s, phys.L_r);
    }
    }
    throw DomainError("build_model: unknown model");
}

Table run_psf_profile(const ExperimentConfig& cfg) {
    Table t{{"theta_rad", "model", "psf"}, {}};
    for (auto model : cfg.models) {
        if (model == ModelChoice::iid) continue;
        const auto& spec = spec_for(cfg, model, Side::receiver);
        for (std::size_t i = 0; i < kPsfGridPoints; ++i) {
            const double theta = std::numbers::pi * static_cast<double>(i) / kPsfGridPoints;
            t.rows.push_back({theta, std::string(to_string(model)), psf_density(spec, theta)});
        }
    }
    return t;
}

Table run_eigen_spectrum(const ExperimentConfig& cfg) {
    Table t{{"index", "model", "normalized_eigenvalue"}, {}};
    for (auto model : cfg.models) {
        const auto corr = build_model(cfg, model);
        const auto spectrum = spectrum_profile(corr.R_r, Side::receiver);
        for (std::size_t i = 0; i < spectrum.size(); ++i)
            t.rows.push_back({static_cast<std::int64_t>(i), std::string(to_string(model)), spectrum.variances[i]});
    }
    return t;
}

std::vector<ModelDoF> run_dof(const ExperimentConfig& cfg) {
    std::vector<ModelDoF> out;
    const auto& phys = cfg.physical;
    for (auto model : cfg.models) {
        DoFResult r;
        if (model == ModelChoice::wdm_iso || model == ModelChoice::wdm_noniso) {
            const auto& ss = spec_for(cfg, model, Side::source);
            const auto& sr = spec_for(cfg, model, Side::receiver);
            const auto ps = variance_profile(phys, ss, Side::source, true);
            const auto pr = variance_profile(phys, sr, Side::receiver, true);
            r = dof(ps, pr, cfg.epsilon, ss.is_isotropic() && sr.is_isotropic());
        } else {
            // iid and Jakes have no angular profile; use their correlation spectra.
            const auto corr = build_model(cfg, model);
            r = dof(spectrum_profile(corr.R_s, Side::source), spectrum_profile(corr.R_r, Side::receiver),
                    cfg.epsilon, true);
        }
        out.push_back({model, r});
    }
    return out;
}

Table dof_table(const std::vector<ModelDoF>& results) {
    Table t{{"model", "dof", "n_s_prime", "n_r_prime", "epsilon"}, {}};
    for (const auto& [model, r] : results)
        t.rows.push_back({std::string(to_string(model)), static_cast<std::int64_t>(r.dof),
                          static_cast<std::int64_t>(r.n_s_prime), static_cast<std::int64_t>(r.n_r_prime),
                          r.epsilon});
    return t;
}

std::vector<ModelCapacity> run_capacity(const ExperimentConfig& cfg) {
    std::vector<ModelCapacity> out;
    const double noise = dbw_to_watts(cfg.noise_var_dbw);
    for (auto model : cfg.models) {
        const auto corr = build_model(cfg, model);
        out.push_back({model, ergodic_capacity(corr, cfg.power_grid_dbw, noise, cfg.realizations, cfg.seed)});
    }
    return out;
}

Table capacity_table(const std::vector<ModelCapacity>& results) {
    Table t{{"p_dbw", "model", "capacity_bits_per_s_per_hz"}, {}};
    for (const auto& [model, r] : results)
        for (std::size_t i = 0; i < r.power_grid_dbw.size(); ++i)
            t.rows.push_back({r.power_grid_dbw[i], std::string(to_string(model)), r.capacity_bits[i]});
    return t;
}

} // namespace holowdm
