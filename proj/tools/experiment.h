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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "config.h"
#include "table.h"

namespace otoc {

struct VerificationRow {
    int64_t t = 0;
    double c_numeric = 0;
    double c_theory = 0;
    double abs_err = 0;
    /// Absent when the theory value is zero.
    std::optional<double> rel_err;
    bool pass = false;
};

/// pass iff rel_err <= tol, or abs_err <= tol when the theory value is zero.
VerificationRow make_verification_row(int64_t t, double numeric, double theory, double tol);
Table verification_table(const std::vector<VerificationRow> &rows);

struct RunResult {
    int exit_code = kExitOk;
    Table table;
    std::vector<VerificationRow> verification;
    std::optional<double> max_rel_err;
    bool pass = true;
    nlohmann::ordered_json summary;
    std::vector<std::string> messages;
    std::vector<std::filesystem::path> files;
};

/// Runs one experiment and writes its files. Numerical-guard failures and
/// I/O errors are thrown as CliError.
RunResult run_experiment(const ExperimentConfig &config);

/// "dir/stem.ext" -> "dir/stem.<tag>.ext"
std::filesystem::path sibling_path(const std::filesystem::path &out, std::string_view tag);

/// Slope of log C against log t over the rows with t in [t_from, t_to], C > 0.
std::optional<double> fit_growth_exponent(const std::vector<int64_t> &t, const std::vector<double> &c, int64_t t_from,
                                          int64_t t_to);

}  // namespace otoc
