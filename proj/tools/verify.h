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
#include <string>
#include <vector>

namespace otoc {

struct VerifyResult {
    int exit_code = 0;
    std::vector<std::string> messages;
};

/// Checks verification reports (CSV or JSON, as written by `run`): exit 0
/// when every row passes, 1 when some row fails, 2 for unreadable,
/// malformed or empty reports.
VerifyResult verify_reports(const std::vector<std::filesystem::path> &paths);

}  // namespace otoc
