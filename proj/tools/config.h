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
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace otoc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerify = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

/// Failure carrying the process exit status it maps to.
class CliError : public std::runtime_error {
   public:
    CliError(int exit_code, const std::string &message) : std::runtime_error(message), exit_code_(exit_code) {
    }
    int exit_code() const {
        return exit_code_;
    }

   private:
    int exit_code_;
};

enum class Kind { kPp, kTp, kFotoc, kEnergy, kLocalization };
enum class Method { kDecomp, kNorm, kBoth };
enum class Format { kCsv, kJson };

struct InitialSpec {
    enum class Type { kCosine, kPlane, kCustom };
    Type type = Type::kCosine;
    std::string text = "cosine";
    int n0 = 0;
    std::vector<int> indices;
    std::vector<double> re;
    std::vector<double> im;
};

/// Raw key = value settings, as read from a config file and flags.
using Settings = std::map<std::string, std::string>;

struct ExperimentConfig {
    Kind kind = Kind::kPp;
    double K = 0;
    double hbar = 0;
    bool resonant = false;
    std::optional<double> epsilon;
    int N = 0;
    bool n_auto = true;
    int64_t t_max = 0;
    int64_t t_stride = 1;
    int64_t t_start = 0;
    InitialSpec initial;
    Method method = Method::kDecomp;
    std::filesystem::path out;
    Format format = Format::kCsv;
    double tol = 1e-6;

    /// t_start, t_start + t_stride, ... up to t_max.
    std::vector<int64_t> schedule() const;
};

/// Inverse golden ratio times 4 pi, the default for localization runs.
inline constexpr double kLocalizationHbar = 4 * 3.141592653589793 * 0.6180339887;

const std::vector<std::string> &known_keys();
/// Accepts "t-max" and "t_max" alike.
std::string canonical_key(std::string_view key);

/// Parses `key = value` lines with `#` comments.
Settings read_config_file(const std::filesystem::path &path);

/// Validates and resolves settings (N = auto goes through the engine sizing rule).
ExperimentConfig build_config(const Settings &settings);

/// A real number, or a multiple of pi written like "pi", "-pi/2", "3pi/2", "0.5*pi".
double parse_real(std::string_view key, std::string_view text);
int64_t parse_int(std::string_view key, std::string_view text);

std::string kind_name(Kind kind);
std::string method_name(Method method);
nlohmann::ordered_json config_to_json(const ExperimentConfig &config);

}  // namespace otoc
