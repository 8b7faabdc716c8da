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

#include "holowdm/errors.hpp"
#include "holowdm/harness.hpp"
#include "holowdm/metrics.hpp"
#include "holowdm/random.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace holowdm;

namespace {
VarianceProfile make_profile(std::vector<double> v, bool normalized) {
    VarianceProfile p;
    p.indices.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p.indices[i] = static_cast<int>(i);
    p.variances = std::move(v);
    p.normalized = normalized;
    return p;
}
} // namespace

TEST_CASE("energy prefix count") {
    CHECK(energy_prefix_count(std::vector<double>{0.5, 0.5, 0, 0}, 0.003) == 2);
    CHECK(energy_prefix_count(std::vector<double>{0.1, 0.7, 0.2}, 0.25) == 2);
    CHECK_THROWS_AS(energy_prefix_count(std::vector<double>{1.0}, 0.0), DomainError);
}

TEST_CASE("dof rules") {
    const auto two = make_profile({0.5, 0.5, 0, 0, 0}, true);
    const auto r = dof(two, two, 0.003, false);
    CHECK(r.dof == 2);
    CHECK(r.n_s_prime == 2);
    CHECK(r.n_r_prime == 2);

    const auto wide = make_profile({0.25, 0.25, 0.25, 0.25}, true);
    CHECK(dof(two, wide, 0.003, false).dof == 2);
    CHECK(dof(two, wide, 0.003, true).dof == 4);

    CHECK_THROWS_AS(dof(make_profile({0.5, 0.5}, false), two, 0.003, false), DomainError);
    CHECK_THROWS_AS(dof(make_profile({0.5, 0.6}, true), two, 0.003, false), DomainError);
}

TEST_CASE("dof of the default geometry") {
    const auto cfg = ExperimentConfig::defaults();
    const auto iso = ScatteringSpec::isotropic();
    const auto pi_s = variance_profile(cfg.physical, iso, Side::source, true);
    const auto pi_r = variance_profile(cfg.physical, iso, Side::receiver, true);
    CHECK(dof(pi_s, pi_r, 0.003, true).dof == 256);

    const auto pm_s = variance_profile(cfg.physical, cfg.scattering_s, Side::source, true);
    const auto pm_r = variance_profile(cfg.physical, cfg.scattering_r, Side::receiver, true);
    const auto r = dof(pm_s, pm_r, 0.003, false);
    CHECK(r.dof == 82);

    std::size_t prev = r.dof;
    for (double eps : {0.01, 0.05, 0.1, 0.3, 0.5}) {
        const auto d = dof(pm_s, pm_r, eps, false).dof;
        CHECK(d <= prev);
        prev = d;
    }
}

TEST_CASE("waterfill named cases") {
    auto p = waterfill(std::vector<double>{5.0}, 3.0, 1.0);
    CHECK(p[0] == doctest::Approx(3.0));
    p = waterfill(std::vector<double>{1.0, 1.0}, 4.0, 1.0);
    CHECK(p[0] == doctest::Approx(2.0));
    CHECK(p[1] == doctest::Approx(2.0));

    // KKT oracle: bisection on the level.
    const std::vector<double> ev{4.0, 1.0};
    p = waterfill(ev, 1.0, 1.0);
    const double mu = oracle::water_level_bisection(ev, 1.0, 1.0);
    CHECK(std::abs(mu - 1.125) < 1e-12);
    CHECK(std::abs(p[0] - 0.875) < 1e-12);
    CHECK(std::abs(p[1] - 0.125) < 1e-12);

    p = waterfill(std::vector<double>{2.0, 0.0, 1e-9}, 1.0, 1.0);
    CHECK(p[1] == 0.0);
    CHECK(p[2] == 0.0);
    CHECK(p[0] == doctest::Approx(1.0));

    CHECK_THROWS_AS(waterfill(std::vector<double>{0.0, 0.0}, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(waterfill(std::vector<double>{1.0}, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(waterfill(std::vector<double>{1.0}, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(waterfill(std::vector<double>{-1.0}, 1.0, 1.0), DomainError);
}

TEST_CASE("waterfill KKT and permutation invariance on random inputs") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 64;
        std::vector<double> ev(n);
        for (double& e : ev) e = std::pow(10.0, 4.0 * u(rng) - 2.0);
        const double P = std::pow(10.0, 4.0 * u(rng) - 1.0);
        const double noise = std::pow(10.0, 2.0 * u(rng) - 1.0);
        const auto p = waterfill(ev, P, noise);

        double total = 0.0;
        double level = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            total += p[i];
            if (p[i] > 0.0) {
                const double l = p[i] + noise / ev[i];
                if (level < 0.0) level = l;
                CHECK(std::abs(l - level) <= 1e-9 * std::max(1.0, level));
            }
        }
        CHECK(std::abs(total - P) <= 1e-10 * P);
        for (std::size_t i = 0; i < n; ++i)
            if (p[i] == 0.0) CHECK(noise / ev[i] >= level - 1e-9 * std::max(1.0, level));

        auto shuffled = ev;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto a = p;
        auto b = waterfill(shuffled, P, noise);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-12 * std::max(1.0, P));
    }
}

TEST_CASE("capacity of a deterministic identity channel") {
    CHECK(std::abs(waterfilled_rate(std::vector<double>{1.0, 1.0}, 2.0, 1.0) - 2.0) < 1e-12);
}

TEST_CASE("1x1 i.i.d. ergodic capacity equals a scalar Monte Carlo") {
    const auto model = build_iid_correlation(1, 1);
    const std::vector<double> grid{-10.0, 0.0, 10.0};
    const auto res = ergodic_capacity(model, grid, 1.0, 2000, 99);
    for (std::size_t p = 0; p < grid.size(); ++p) {
        double acc = 0.0;
        for (std::size_t r = 0; r < 2000; ++r) {
            ComplexGaussian g(stream_seed(99, r));
            acc += std::log2(1.0 + dbw_to_watts(grid[p]) * std::norm(g()));
        }
        CHECK(std::abs(res.capacity_bits[p] - acc / 2000) < 1e-12);
    }
}

TEST_CASE("capacity is monotone, concave in dB-free power and vanishes at low power") {
    const auto model = build_iid_correlation(8, 8);
    std::vector<double> grid;
    for (double d = -60; d <= 30; d += 3) grid.push_back(d);
    const auto res = ergodic_capacity(model, grid, 1.0, 50, 5);
    CHECK(res.capacity_bits.front() < 1e-4);
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(res.capacity_bits[i] > res.capacity_bits[i - 1]);

    // Concavity in linear power on a uniform linear grid.
    std::vector<double> lin_dbw;
    for (int i = 1; i <= 20; ++i) lin_dbw.push_back(10.0 * std::log10(0.5 * i));
    const auto lin = ergodic_capacity(model, lin_dbw, 1.0, 50, 5);
    for (std::size_t i = 1; i + 1 < lin_dbw.size(); ++i)
        CHECK(lin.capacity_bits[i + 1] - 2 * lin.capacity_bits[i] + lin.capacity_bits[i - 1] <= 1e-9);
    CHECK_THROWS_AS(ergodic_capacity(model, grid, 1.0, 0, 5), DomainError);
}

TEST_CASE("WDM diagonal shortcut: eigenvalues equal the sorted diagonal") {
    const auto cfg = ExperimentConfig::defaults();
    const auto model = build_model(cfg, ModelChoice::wdm_noniso);
    const auto ev = hermitian_eigenvalues(model.R_r);
    const Eigen::VectorXd d = model.R_r.diagonal().real();
    std::vector<double> diag(d.data(), d.data() + d.size());
    std::sort(diag.begin(), diag.end(), std::greater<>());
    for (Eigen::Index i = 0; i < ev.size(); ++i) CHECK(std::abs(ev[i] - diag[i]) <= 1e-12);
}
