// Copyright 2026 The QKR-OTOC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace otoc {

/// Empty cells render as "" in CSV and null in JSON.
using Cell = std::variant<std::monostate, int64_t, double, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

Cell number_or_empty(const std::optional<double> &value);

/// 17 significant digits, RFC-4180 quoting for text cells.
std::string to_csv(const Table &table);
/// Array of row objects; empty cells become null.
nlohmann::ordered_json to_json_rows(const Table &table);

/// Writes the whole file or throws CliError.
void write_text_file(const std::filesystem::path &path, const std::string &text);

}  // namespace otoc
