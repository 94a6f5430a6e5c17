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


#include "table.h"

#include <fstream>

#include "config.h"
#include "fmt/format.h"

namespace otoc {

namespace {

std::string csv_cell(const Cell &cell) {
    if (const auto *i = std::get_if<int64_t>(&cell)) {
        return fmt::format("{}", *i);
    }
    if (const auto *b = std::get_if<bool>(&cell)) {
        return *b ? "true" : "false";
    }
    if (const auto *d = std::get_if<double>(&cell)) {
        return fmt::format("{:.17g}", *d);
    }
    if (const auto *s = std::get_if<std::string>(&cell)) {
        if (s->find_first_of(",\"\r\n") == std::string::npos) {
            return *s;
        }
        std::string quoted = "\"";
        for (char ch : *s) {
            if (ch == '"') {
                quoted += '"';
            }
            quoted += ch;
        }
        return quoted + "\"";
    }
    return {};
}

}  // namespace

Cell number_or_empty(const std::optional<double> &value) {
    if (value) {
        return *value;
    }
    return std::monostate{};
}

std::string to_csv(const Table &table) {
    std::string out;
    for (size_t i = 0; i < table.columns.size(); ++i) {
        out += (i ? "," : "") + csv_cell(table.columns[i]);
    }
    out += "\n";
    for (const auto &row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out += ",";
            }
            out += csv_cell(row[i]);
        }
        out += "\n";
    }
    return out;
}

nlohmann::ordered_json to_json_rows(const Table &table) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (size_t i = 0; i < row.size(); ++i) {
            const Cell &cell = row[i];
            std::visit(
                [&](const auto &v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, std::monostate>) {
                        obj[table.columns[i]] = nullptr;
                    } else {
                        obj[table.columns[i]] = v;
                    }
                },
                cell);
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    out.close();
    if (!out) {
        throw CliError(kExitUsage, fmt::format("cannot write '{}'", path.string()));
    }
}

}  // namespace otoc
