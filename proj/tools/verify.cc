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


#include "verify.h"

#include <fstream>
#include <optional>
#include <sstream>

#include "config.h"
#include "fmt/format.h"
#include "json.hpp"

namespace otoc {

namespace {

struct ReportRow {
    std::string echo;
    std::string t;
    std::optional<double> rel_err;
    bool pass = false;
};

std::vector<std::string> split_csv_line(const std::string &line, const std::string &where) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                fields.back() += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.emplace_back();
        } else if (ch != '\r') {
            fields.back() += ch;
        }
    }
    if (quoted) {
        throw CliError(kExitUsage, where + ": unterminated quote");
    }
    return fields;
}

std::vector<ReportRow> read_csv_report(const std::string &text, const std::string &name) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.empty()) {
        throw CliError(kExitUsage, name + ": no data");
    }
    const auto header = split_csv_line(line, name);
    auto column = [&](const std::string &key) -> std::optional<size_t> {
        for (size_t i = 0; i < header.size(); ++i) {
            if (header[i] == key) {
                return i;
            }
        }
        return std::nullopt;
    };
    const auto pass_col = column("pass");
    if (!pass_col) {
        throw CliError(kExitUsage, name + ": malformed report (no 'pass' column)");
    }
    const auto rel_col = column("rel_err");
    const auto t_col = column("t");
    std::vector<ReportRow> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        const std::string where = fmt::format("{}:{}", name, line_no);
        const auto fields = split_csv_line(line, where);
        if (fields.size() != header.size()) {
            throw CliError(kExitUsage, fmt::format("{}: malformed row (expected {} fields, found {})", where,
                                                   header.size(), fields.size()));
        }
        ReportRow row;
        row.echo = line;
        row.t = t_col ? fields[*t_col] : std::string();
        const std::string &pass = fields[*pass_col];
        if (pass != "true" && pass != "false") {
            throw CliError(kExitUsage, fmt::format("{}: malformed pass value '{}'", where, pass));
        }
        row.pass = pass == "true";
        if (rel_col && !fields[*rel_col].empty()) {
            row.rel_err = parse_real(where + " rel_err", fields[*rel_col]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ReportRow> read_json_report(const std::string &text, const std::string &name) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw CliError(kExitUsage, fmt::format("{}: malformed JSON: {}", name, e.what()));
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
        throw CliError(kExitUsage, name + ": malformed report (no 'rows' array)");
    }
    std::vector<ReportRow> rows;
    for (const auto &r : doc["rows"]) {
        if (!r.is_object() || !r.contains("pass") || !r["pass"].is_boolean()) {
            throw CliError(kExitUsage, name + ": malformed row " + r.dump());
        }
        ReportRow row;
        row.echo = r.dump();
        row.pass = r["pass"].get<bool>();
        if (r.contains("t")) {
            row.t = r["t"].dump();
        }
        if (r.contains("rel_err") && r["rel_err"].is_number()) {
            row.rel_err = r["rel_err"].get<double>();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

VerifyResult verify_reports(const std::vector<std::filesystem::path> &paths) {
    VerifyResult result;
    if (paths.empty()) {
        result.exit_code = kExitUsage;
        result.messages.push_back("no report given");
        return result;
    }
    std::optional<double> worst;
    std::string worst_where;
    size_t total = 0;
    size_t failing = 0;
    try {
        for (const auto &path : paths) {
            std::ifstream in(path, std::ios::binary);
            if (!in) {
                throw CliError(kExitUsage, fmt::format("cannot read '{}'", path.string()));
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            const std::string text = buffer.str();
            const std::string name = path.string();
            const auto first = text.find_first_not_of(" \t\r\n");
            if (first == std::string::npos) {
                throw CliError(kExitUsage, name + ": no data");
            }
            const auto rows = text[first] == '{' ? read_json_report(text, name) : read_csv_report(text, name);
            if (rows.empty()) {
                throw CliError(kExitUsage, name + ": no data");
            }
            for (const auto &row : rows) {
                ++total;
                if (row.rel_err && (!worst || *row.rel_err > *worst)) {
                    worst = row.rel_err;
                    worst_where = fmt::format("{} t={}", name, row.t);
                }
                if (!row.pass) {
                    ++failing;
                    result.messages.push_back(fmt::format("FAIL {}: {}", name, row.echo));
                }
            }
        }
    } catch (const CliError &e) {
        result.exit_code = e.exit_code();
        result.messages.push_back(std::string("error: ") + e.what());
        return result;
    }
    result.messages.push_back(
        worst ? fmt::format("worst rel_err: {} ({})", *worst, worst_where) : std::string("worst rel_err: n/a"));
    result.messages.push_back(fmt::format("{} of {} rows pass", total - failing, total));
    result.exit_code = failing == 0 ? 0 : 1;
    return result;
}

}  // namespace otoc
