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

#include "holowdm/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace holowdm {
namespace {

std::string quote_if_needed(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_cell(const Cell& cell) {
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&cell)) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", *d);
        return buf;
    }
    return quote_if_needed(std::get<std::string>(cell));
}

} // namespace

std::string format_csv(const Table& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += quote_if_needed(table.columns[c]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) throw std::logic_error("format_csv: ragged row");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_cell(row[c]);
        }
        out += '\n';
    }
    return out;
}

void emit_csv(const Table& table, const std::filesystem::path& path) {
    const std::string text = format_csv(table);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

} // namespace holowdm
