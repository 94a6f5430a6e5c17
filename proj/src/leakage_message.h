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

#include <cstdio>
#include <string>
#include <string_view>

namespace qkr::detail {

inline std::string leakage_message(std::string_view context, double fraction, int size) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.3g", fraction);
    return std::string(context) + ": boundary leakage " + buffer + " (limit 1e-12) on lattice N=" +
           std::to_string(size) + "; increase N";
}

}  // namespace qkr::detail
