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

#include <cstddef>
#include <functional>

namespace holowdm {

/// Worker count from HOLOWDM_THREADS (0 or unset: hardware concurrency).
std::size_t worker_threads();

/// Runs body(i) for i in [0, count) on up to worker_threads() threads. Each
/// index runs exactly once; callers write into pre-sized per-index slots so
/// results do not depend on scheduling. The first exception is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace holowdm
