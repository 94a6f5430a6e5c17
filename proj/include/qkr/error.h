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

#include <stdexcept>
#include <string>

namespace qkr {

enum class ErrorCode {
    kInvalidArgument = 1,
    kLatticeMismatch = 2,
    kLeakage = 3,
    kUnnormalized = 4,
    kResolution = 5,
};

/// Exception type for every failure raised by the library.
///
/// The code distinguishes numerical-guard failures (leakage, grid resolution)
/// from caller mistakes, which the C API and the CLI map onto distinct exit
/// statuses.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {
    }
    ErrorCode code() const {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace qkr
