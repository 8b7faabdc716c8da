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

#include "holowdm/config.hpp"

#include "holowdm/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace holowdm {
namespace {

using nlohmann::json;

double number(const json& doc, const std::string& key) {
    const auto& v = doc.at(key);
    if (!v.is_number()) throw ConfigError(key, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(key, "must be finite");
    return x;
}

double positive(const json& doc, const std::string& key) {
    const double x = number(doc, key);
    if (x <= 0.0) throw ConfigError(key, "must be > 0");
    return x;
}

ScatteringSpec parse_clusters(const json& list, const std::string& key) {
    if (!list.is_array()) throw ConfigError(key, "expected a list of clusters");
    if (list.empty()) return ScatteringSpec::isotropic();

    std::vector<Cluster> clusters;
    double total = 0.0;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string path = key + "[" + std::to_string(i) + "]";
        const auto& c = list[i];
        if (!c.is_object()) throw ConfigError(path, "expected an object {mean_deg, circ_var, weight}");
        for (const auto& [field, _] : c.items())
            if (field != "mean_deg" && field != "circ_var" && field != "weight")
                throw ConfigError(path + "." + field, "unknown key");
        for (const char* field : {"mean_deg", "circ_var", "weight"})
            if (!c.contains(field)) throw ConfigError(path + "." + field, "missing");

        const double mean_deg = number(c, "mean_deg");
        const double circ_var = number(c, "circ_var");
        const double weight = number(c, "weight");
        if (mean_deg < 0.0 || mean_deg >= 180.0) throw ConfigError(path + ".mean_deg", "must lie in [0, 180)");
        if (circ_var <= 0.0 || circ_var > 1.0) throw ConfigError(path + ".circ_var", "must lie in (0, 1]");
        if (weight <= 0.0) throw ConfigError(path + ".weight", "must be > 0");
        total += weight;
        clusters.emplace_back(weight, mean_deg * std::numbers::pi / 180.0, circ_var);
    }
    if (std::abs(total - 1.0) > 1e-9) throw ConfigError(key + ".weight", "weights must sum to 1");
    return ScatteringSpec::mixture(std::move(clusters));
}

} // namespace

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig cfg = ExperimentConfig::defaults();
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return cfg;

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<document>", e.what());
    }
    if (!doc.is_object()) throw ConfigError("<document>", "expected a JSON object");

    static const std::set<std::string> known = {
        "lambda_m", "L_s_over_lambda", "L_r_over_lambda", "d_m", "epsilon", "noise_var_dbw",
        "power_grid_dbw", "realizations", "seed", "models", "clusters", "clusters_source"};
    for (const auto& [key, _] : doc.items())
        if (!known.contains(key)) throw ConfigError(key, "unknown key");

    if (doc.contains("lambda_m")) cfg.physical.lambda = positive(doc, "lambda_m");
    double ls = cfg.physical.L_s / cfg.physical.lambda;
    double lr = cfg.physical.L_r / cfg.physical.lambda;
    if (doc.contains("L_s_over_lambda")) ls = positive(doc, "L_s_over_lambda");
    if (doc.contains("L_r_over_lambda")) lr = positive(doc, "L_r_over_lambda");
    cfg.physical.L_s = ls * cfg.physical.lambda;
    cfg.physical.L_r = lr * cfg.physical.lambda;
    if (2.0 * ls < 1.0) throw ConfigError("L_s_over_lambda", "must be >= 0.5 (no propagating modes)");
    if (2.0 * lr < 1.0) throw ConfigError("L_r_over_lambda", "must be >= 0.5 (no propagating modes)");
    if (doc.contains("d_m")) {
        cfg.physical.d = number(doc, "d_m");
        if (cfg.physical.d < 0.0) throw ConfigError("d_m", "must be >= 0");
    }
    if (doc.contains("epsilon")) {
        cfg.epsilon = number(doc, "epsilon");
        if (cfg.epsilon <= 0.0 || cfg.epsilon >= 1.0) throw ConfigError("epsilon", "must lie in (0, 1)");
    }
    if (doc.contains("noise_var_dbw")) cfg.noise_var_dbw = number(doc, "noise_var_dbw");

    if (doc.contains("power_grid_dbw")) {
        const auto& grid = doc["power_grid_dbw"];
        if (!grid.is_array() || grid.empty()) throw ConfigError("power_grid_dbw", "expected a non-empty list");
        cfg.power_grid_dbw.clear();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!grid[i].is_number() || !std::isfinite(grid[i].get<double>()))
                throw ConfigError("power_grid_dbw[" + std::to_string(i) + "]", "expected a finite number");
            cfg.power_grid_dbw.push_back(grid[i].get<double>());
        }
    }
    if (doc.contains("realizations")) {
        const auto& v = doc["realizations"];
        if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
            throw ConfigError("realizations", "expected an integer >= 1");
        cfg.realizations = v.get<std::size_t>();
    }
    if (doc.contains("seed")) {
        const auto& v = doc["seed"];
        if (!v.is_number_unsigned()) throw ConfigError("seed", "expected a non-negative integer");
        cfg.seed = v.get<std::uint64_t>();
    }
    if (doc.contains("models")) {
        const auto& list = doc["models"];
        if (!list.is_array() || list.empty()) throw ConfigError("models", "expected a non-empty list");
        cfg.models.clear();
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string path = "models[" + std::to_string(i) + "]";
            if (!list[i].is_string()) throw ConfigError(path, "expected a model name");
            const auto m = parse_model(list[i].get<std::string>());
            if (!m) throw ConfigError(path, "unknown model '" + list[i].get<std::string>() +
                                                "' (iid, jakes, wdm_iso, wdm_noniso)");
            cfg.models.push_back(*m);
        }
    }
    if (doc.contains("clusters")) {
        cfg.scattering_r = parse_clusters(doc["clusters"], "clusters");
        cfg.scattering_s = cfg.scattering_r;
    }
    if (doc.contains("clusters_source")) cfg.scattering_s = parse_clusters(doc["clusters_source"], "clusters_source");
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(path.string(), "cannot open config file");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

} // namespace holowdm
