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

#include <stdexcept>
#include <string>

namespace holowdm {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure (quadrature, root bracketing) failed to converge.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid experiment configuration. `key_path()` names the offending entry,
/// e.g. "clusters[1].circ_var".
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key_path, const std::string& what)
        : std::runtime_error(key_path + ": " + what), key_path_(std::move(key_path)) {}

    const std::string& key_path() const noexcept { return key_path_; }

private:
    std::string key_path_;
};

} // namespace holowdm
