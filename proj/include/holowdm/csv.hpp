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

#include "holowdm/harness.hpp"

#include <filesystem>
#include <string>

namespace holowdm {

/// RFC 4180 text with a header row, LF line endings, and doubles printed with
/// 17 significant digits (round-trip exact).
std::string format_csv(const Table& table);

/// Writes format_csv(table) to `path`; throws std::runtime_error naming the path on I/O failure.
void emit_csv(const Table& table, const std::filesystem::path& path);

} // namespace holowdm
