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

#include <complex>
#include <cstdint>
#include <random>

namespace holowdm {

/// Seed for stream `index` derived from `base` by SplitMix64 mixing, so each
/// Monte Carlo realization owns an independent, scheduling-free stream.
std::uint64_t stream_seed(std::uint64_t base, std::uint64_t index);

/// Circularly symmetric complex Gaussian CN(0, variance) sampler. Box-Muller
/// on raw 64-bit draws, so sequences are identical across standard libraries.
class ComplexGaussian {
public:
    explicit ComplexGaussian(std::uint64_t seed) : engine_(seed) {}

    std::complex<double> operator()(double variance = 1.0);

private:
    double uniform_open();  // (0, 1)
    std::mt19937_64 engine_;
};

} // namespace holowdm
