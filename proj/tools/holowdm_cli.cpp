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

// holowdm <psf|eigs|dof|capacity|all> --config <path> --out <dir> [--seed N]

#include "holowdm/config.hpp"
#include "holowdm/csv.hpp"
#include "holowdm/errors.hpp"
#include "holowdm/harness.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace fs = std::filesystem;

namespace {

void write_table(const holowdm::Table& table, const fs::path& path) {
    holowdm::emit_csv(table, path);
    std::cerr << "wrote " << path.string() << " (" << table.rows.size() << " rows)\n";
}

void run(const std::string& subcommand, const holowdm::ExperimentConfig& cfg, const fs::path& out) {
    const bool all = subcommand == "all";
    if (all || subcommand == "psf") write_table(holowdm::run_psf_profile(cfg), out / "psf.csv");
    if (all || subcommand == "eigs") write_table(holowdm::run_eigen_spectrum(cfg), out / "eigs.csv");
    if (all || subcommand == "dof") {
        const auto results = holowdm::run_dof(cfg);
        for (const auto& r : results)
            std::printf("dof %-10s %zu (n_s'=%zu, n_r'=%zu)\n", std::string(to_string(r.model)).c_str(),
                        r.result.dof, r.result.n_s_prime, r.result.n_r_prime);
        write_table(holowdm::dof_table(results), out / "dof.csv");
    }
    if (all || subcommand == "capacity") {
        const auto results = holowdm::run_capacity(cfg);
        for (const auto& r : results)
            for (std::size_t i = 0; i < r.result.power_grid_dbw.size(); ++i)
                std::printf("capacity %-10s P=%6.2f dBW  %.4f kbit/s/Hz\n",
                            std::string(to_string(r.model)).c_str(), r.result.power_grid_dbw[i],
                            r.result.capacity_bits[i] / 1000.0);
        write_table(holowdm::capacity_table(results), out / "capacity.csv");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wavenumber-division multiplexed holographic MIMO channel experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;

    for (const char* name : {"psf", "eigs", "dof", "capacity", "all"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "experiment config (JSON)")->required();
        sub->add_option("--out", out_dir, "output directory for CSV files")->required();
        sub->add_option("--seed", seed, "override the config seed");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        auto cfg = holowdm::load_config(config_path);
        if (seed) cfg.seed = *seed;
        for (const auto& w : cfg.physical.warnings()) std::cerr << "warning: " << w << '\n';

        const fs::path out(out_dir);
        fs::create_directories(out);
        run(app.get_subcommands().front()->get_name(), cfg, out);
    } catch (const holowdm::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
