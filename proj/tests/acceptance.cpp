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

// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "holowdm/channel.hpp"
#include "holowdm/harness.hpp"
#include "holowdm/linalg.hpp"
#include "holowdm/metrics.hpp"
#include "holowdm/random.hpp"
#include "holowdm/scattering.hpp"
#include "holowdm/specfun.hpp"
#include "holowdm/wavenumber.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace holowdm;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<double> cumulative(const Eigen::VectorXd& ev) {
    std::vector<double> c(static_cast<std::size_t>(ev.size()));
    double total = ev.sum(), run = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) c[i] = (run += ev[i]) / total;
    return c;
}

std::size_t energy_index(const std::vector<double>& cum, double level) {
    for (std::size_t i = 0; i < cum.size(); ++i)
        if (cum[i] >= level) return i + 1;
    return cum.size();
}

// 1. Isotropic DoF for the default 128-wavelength lines.
Outcome dof_isotropic() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto cfg = ExperimentConfig::defaults();
    const auto iso = ScatteringSpec::isotropic();
    const auto r = dof(variance_profile(cfg.physical, iso, Side::source, true),
                       variance_profile(cfg.physical, iso, Side::receiver, true), cfg.epsilon, true);
    const double t = seconds_since(t0);
    return {r.dof == 256 && t < 1.0, fmt("DoF_iso=%zu (expect 256), %.3f s (< 1 s)", r.dof, t)};
}

// 2. Non-isotropic DoF with the two-cluster mixture and epsilon = 0.3%.
Outcome dof_non_isotropic() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto cfg = ExperimentConfig::defaults();
    const auto r = dof(variance_profile(cfg.physical, cfg.scattering_s, Side::source, true),
                       variance_profile(cfg.physical, cfg.scattering_r, Side::receiver, true), 0.003, false);
    const double t = seconds_since(t0);
    const bool ok = std::abs(static_cast<long>(r.dof) - 82) <= 1 && t < 5.0;
    return {ok, fmt("DoF_non-iso=%zu (expect 82 +/- 1; n_s'=%zu n_r'=%zu), %.3f s (< 5 s)", r.dof, r.n_s_prime,
                    r.n_r_prime, t)};
}

// 3. Quadrature of the isotropic ACF against J0(k r_x).
Outcome jakes_closed_form() {
    const double lambda = 0.01, k = 2 * pi / lambda;
    const auto iso = ScatteringSpec::isotropic();
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double r = 10.0 * lambda * i / 999.0;
        worst = std::max(worst, std::abs(acf_by_quadrature(iso, k, r) - std::complex<double>(oracle::std_j0(k * r), 0.0)));
    }
    return {worst <= 1e-8, fmt("max |Gamma_quad - J0| = %.3e over 1000 points in [0, 10 lambda] (<= 1e-8)", worst)};
}

// 4. Normalized eigen-spectra: WDM isotropic vs lambda/2-sampled Jakes, and the
//    non-isotropic 99.7% energy index.
Outcome spectrum_coincidence() {
    const auto cfg = ExperimentConfig::defaults();
    const auto ev_iso = hermitian_eigenvalues(build_model(cfg, ModelChoice::wdm_iso).R_r);
    const auto ev_jakes = hermitian_eigenvalues(build_model(cfg, ModelChoice::jakes).R_r).cwiseMax(0.0).eval();
    const auto ev_non = hermitian_eigenvalues(build_model(cfg, ModelChoice::wdm_noniso).R_r);
    const auto c_iso = cumulative(ev_iso), c_jakes = cumulative(ev_jakes), c_non = cumulative(ev_non);
    double sup = 0.0;
    for (std::size_t i = 0; i < c_iso.size(); ++i) sup = std::max(sup, std::abs(c_iso[i] - c_jakes[i]));
    const auto idx_iso = energy_index(c_iso, 0.997), idx_non = energy_index(c_non, 0.997);
    const bool ok = ev_iso.size() == 256 && ev_jakes.size() == 256 && sup <= 0.05 && 2 * idx_non <= idx_iso;
    return {ok, fmt("n=%ld, sup|cum_iso - cum_jakes| = %.4f (<= 0.05); 99.7%% index non-iso=%zu, iso=%zu (non <= iso/2)",
                    static_cast<long>(ev_iso.size()), sup, idx_non, idx_iso)};
}

// 5. Capacity ordering and coincidence at desk scale.
Outcome capacity_reproduction() {
    const auto t0 = std::chrono::steady_clock::now();
    auto cfg = ExperimentConfig::defaults();
    cfg.realizations = 100;
    cfg.power_grid_dbw = {0, 10, 20, 30};
    cfg.noise_var_dbw = 0.0;
    const auto results = run_capacity(cfg);
    const double t = seconds_since(t0);

    auto curve = [&](ModelChoice m) -> const std::vector<double>& {
        for (const auto& r : results)
            if (r.model == m) return r.result.capacity_bits;
        throw std::logic_error("missing model");
    };
    bool increasing = true;
    for (const auto& r : results)
        for (std::size_t i = 1; i < r.result.capacity_bits.size(); ++i)
            increasing = increasing && r.result.capacity_bits[i] > r.result.capacity_bits[i - 1];
    const auto &iid = curve(ModelChoice::iid), &jakes = curve(ModelChoice::jakes),
               &iso = curve(ModelChoice::wdm_iso), &non = curve(ModelChoice::wdm_noniso);
    bool ordered = true;
    for (std::size_t i = 0; i < iso.size(); ++i) ordered = ordered && non[i] < iso[i];
    const double iso_jakes = std::abs(iso[3] - jakes[3]) / jakes[3];
    const double iid_iso = std::abs(iid[3] - iso[3]) / iso[3];
    const bool ok = increasing && ordered && iso_jakes <= 0.05 && iid_iso <= 0.10 && t <= 600.0;
    return {ok, fmt("(a) increasing=%s (b) non<iso=%s (c) |iso-jakes|/jakes=%.4f (<= 0.05), |iid-iso|/iso=%.4f "
                    "(<= 0.10); C@30dBW [kbit/s/Hz] iid=%.3f jakes=%.3f iso=%.3f non=%.3f; %.1f s (<= 600 s)",
                    increasing ? "yes" : "no", ordered ? "yes" : "no", iso_jakes, iid_iso, iid[3] / 1e3,
                    jakes[3] / 1e3, iso[3] / 1e3, non[3] / 1e3, t)};
}

// 6. Sample covariance of vec(H) against R_s (x) R_r, L = 4 lambda (n = 8).
Outcome kronecker_covariance() {
    const PhysicalConfig phys{.lambda = 0.01, .L_s = 0.04, .L_r = 0.04, .d = 0.0};
    const auto iso = ScatteringSpec::isotropic();
    const auto wdm = build_wdm_correlation(variance_profile(phys, iso, Side::source, true),
                                           variance_profile(phys, iso, Side::receiver, true), phys.L_s, phys.L_r);
    const auto jakes = build_jakes_correlation(phys);
    constexpr int draws = 20000;
    const double bound = 5.0 / std::sqrt(static_cast<double>(draws));

    auto deviation = [&](const CorrelationModel& model, double& off_diag) {
        const Eigen::Index dim = model.n_s() * model.n_r();
        Eigen::MatrixXcd cov = Eigen::MatrixXcd::Zero(dim, dim);
        for (int r = 0; r < draws; ++r) {
            const auto H = draw_channel(model, stream_seed(6, static_cast<std::uint64_t>(r))).H;
            const Eigen::Map<const Eigen::VectorXcd> v(H.data(), dim);
            cov.noalias() += v * v.adjoint();
        }
        cov /= draws;
        Eigen::MatrixXcd err = cov - model.kronecker();
        const double all = err.cwiseAbs().maxCoeff();
        err.diagonal().setZero();
        off_diag = err.cwiseAbs().maxCoeff();
        return all;
    };
    double wdm_off = 0.0, jakes_off = 0.0;
    const double wdm_max = deviation(wdm, wdm_off);
    const double jakes_max = deviation(jakes, jakes_off);
    const bool ok = wdm.n_s() == 8 && wdm_max <= bound && wdm_off <= bound && jakes_max <= bound;
    return {ok, fmt("bound 5/sqrt(2e4)=%.4f; WDM max=%.4f off-diag=%.4f; Jakes max=%.4f", bound, wdm_max, wdm_off,
                    jakes_max)};
}

// 7. Water-filling KKT conditions on random eigenvalue vectors.
Outcome waterfill_kkt() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_sum = 0.0, worst_level = 0.0, worst_slack = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng() % 64;
        std::vector<double> ev(n);
        for (double& e : ev) e = u(rng) < 0.1 ? 0.0 : std::pow(10.0, 6.0 * u(rng) - 3.0);
        if (std::all_of(ev.begin(), ev.end(), [](double e) { return e == 0.0; })) ev[0] = 1.0;
        const double P = std::pow(10.0, 6.0 * u(rng) - 3.0);
        const double noise = std::pow(10.0, 4.0 * u(rng) - 2.0);
        const auto p = waterfill(ev, P, noise);

        const double mu = oracle::water_level_bisection(ev, P, noise);
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            total += p[i];
            if (p[i] > 0.0) {
                worst_level = std::max(worst_level, std::abs(p[i] + noise / ev[i] - mu) / std::max(1.0, mu));
            } else if (ev[i] > 0.0) {
                worst_slack = std::max(worst_slack, (mu - noise / ev[i]) / std::max(1.0, mu));
            }
        }
        worst_sum = std::max(worst_sum, std::abs(total - P) / P);
    }
    const bool ok = worst_sum <= 1e-10 && worst_level <= 1e-9 && worst_slack <= 1e-9;
    return {ok, fmt("1000 vectors: max |sum P - P|/P=%.2e (<= 1e-10), level dev=%.2e (<= 1e-9), slackness "
                    "violation=%.2e (<= 1e-9)",
                    worst_sum, worst_level, worst_slack)};
}

// 8. Special functions against independent oracles, plus the concentration round trip.
Outcome special_functions() {
    double i_err = 0.0, j_err = 0.0, ratio_err = 0.0, rt_err = 0.0;
    for (double x = 1e-4; x <= 700.0; x *= 1.05) {
        const double ref0 = x < 40 ? oracle::series_i0(x) : oracle::std_i0(x);
        const double ref1 = x < 40 ? oracle::series_i1(x) : oracle::std_i1(x);
        i_err = std::max({i_err, std::abs(bessel_i0(x) - ref0) / ref0, std::abs(bessel_i1(x) - ref1) / ref1});
        ratio_err = std::max(ratio_err, std::abs(bessel_ratio_i1_i0(x) - oracle::std_i1(x) / oracle::std_i0(x)));
    }
    for (double a = 1e3; a <= 1e8; a *= 1.5) {
        const double asym = 1.0 - 1.0 / (2 * a) - 1.0 / (8 * a * a) - 1.0 / (8 * a * a * a);
        ratio_err = std::max(ratio_err, std::abs(bessel_ratio_i1_i0(a) - asym) / asym);
    }
    for (double x = 1e-3; x <= 1e4; x *= 1.03) {
        j_err = std::max(j_err, std::abs(bessel_j0(x) - oracle::std_j0(x)));
        if (x < 25) j_err = std::max(j_err, std::abs(bessel_j0(x) - oracle::series_j0(x)));
    }
    for (double nu = 1e-4; nu <= 1.0; nu *= 1.05) {
        const double r = bessel_ratio_i1_i0(solve_concentration(nu));
        rt_err = std::max(rt_err, std::abs(1.0 - r * r - nu));
    }
    const double r1 = bessel_ratio_i1_i0(solve_concentration(1.0));
    rt_err = std::max(rt_err, std::abs(1.0 - r1 * r1 - 1.0));
    const bool ok = i_err <= 1e-12 && ratio_err <= 1e-12 && j_err <= 1e-10 && rt_err <= 1e-9;
    return {ok, fmt("I0/I1 rel=%.2e (<= 1e-12), I1/I0 err=%.2e (<= 1e-12), J0 abs=%.2e (<= 1e-10), "
                    "nu^2 round trip=%.2e (<= 1e-9)",
                    i_err, ratio_err, j_err, rt_err)};
}

// 9. Byte-identical CSVs from two CLI runs with different worker counts.
Outcome determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "holowdm_acceptance_determinism";
    fs::remove_all(dir);
    fs::create_directories(dir);
    {
        std::ofstream cfg(dir / "config.json");
        cfg << R"({"realizations": 20, "power_grid_dbw": [0, 10, 20, 30], "seed": 2024})";
    }
    auto run = [&](const char* threads, const char* out) {
        const std::string cmd = std::string("HOLOWDM_THREADS=") + threads + " '" + HOLOWDM_CLI_PATH + "' all --config '" +
                                (dir / "config.json").string() + "' --out '" + (dir / out).string() + "' > /dev/null 2>&1";
        return std::system(cmd.c_str());
    };
    if (run("1", "a") != 0 || run("4", "b") != 0) return {false, "CLI run failed"};

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string detail = "HOLOWDM_THREADS=1 vs 4:";
    bool ok = true;
    for (const char* name : {"psf.csv", "eigs.csv", "dof.csv", "capacity.csv"}) {
        const auto a = slurp(dir / "a" / name), b = slurp(dir / "b" / name);
        const bool same = !a.empty() && a == b;
        ok = ok && same;
        detail += fmt(" %s %s (%zu bytes)", name, same ? "identical" : "DIFFER", a.size());
    }
    fs::remove_all(dir);
    return {ok, detail};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"1 DoF isotropic", dof_isotropic},
        {"2 DoF non-isotropic", dof_non_isotropic},
        {"3 Jakes closed form", jakes_closed_form},
        {"4 eigen-spectrum coincidence", spectrum_coincidence},
        {"5 capacity reproduction", capacity_reproduction},
        {"6 Kronecker covariance", kronecker_covariance},
        {"7 water-filling KKT", waterfill_kkt},
        {"8 special functions", special_functions},
        {"9 determinism", determinism},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %-30s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
