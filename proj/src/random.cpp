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

#include "holowdm/random.hpp"

#include <cmath>
#include <numbers>

namespace holowdm {

std::uint64_t stream_seed(std::uint64_t base, std::uint64_t index) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(base) ^ (index * 0xd1b54a32d192ed03ULL + 0x632be59bd9b4e019ULL));
}

double ComplexGaussian::uniform_open() {
    // 53 random bits, shifted by half an ulp so 0 is never produced.
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

std::complex<double> ComplexGaussian::operator()(double variance) {
    const double radius = std::sqrt(-variance * std::log(uniform_open()));
    const double angle = 2.0 * std::numbers::pi * uniform_open();
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

} // namespace holowdm
