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


#include "config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>

#include "fmt/format.h"
#include "qkr/qkr_c.h"

namespace otoc {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

CliError type_error(std::string_view key, std::string_view what, std::string_view text) {
    return CliError(kExitUsage, fmt::format("{}: expected {}, got '{}'", key, what, text));
}

bool parse_double_exact(std::string_view text, double &out) {
    if (text.empty()) {
        return false;
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size();
}

InitialSpec load_custom_state(const std::string &text, const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw CliError(kExitUsage, fmt::format("initial: cannot read '{}'", path.string()));
    }
    InitialSpec spec;
    spec.type = InitialSpec::Type::kCustom;
    spec.text = text;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = line;
        body = trim(body.substr(0, body.find('#')));
        if (body.empty()) {
            continue;
        }
        std::vector<std::string_view> fields;
        while (!body.empty()) {
            const auto end = body.find_first_of(" \t,");
            fields.push_back(body.substr(0, end));
            body = end == std::string_view::npos ? std::string_view{} : trim(body.substr(end + 1));
        }
        const auto where = fmt::format("{}:{}", path.string(), line_no);
        if (fields.size() < 2 || fields.size() > 3) {
            throw CliError(kExitUsage, fmt::format("{}: expected 'n re [im]'", where));
        }
        spec.indices.push_back(static_cast<int>(parse_int(where, fields[0])));
        spec.re.push_back(parse_real(where, fields[1]));
        spec.im.push_back(fields.size() == 3 ? parse_real(where, fields[2]) : 0.0);
    }
    if (spec.indices.empty()) {
        throw CliError(kExitUsage, fmt::format("initial: '{}' has no coefficients", path.string()));
    }
    return spec;
}

InitialSpec parse_initial(const std::string &text) {
    InitialSpec spec;
    spec.text = text;
    if (text == "cosine") {
        return spec;
    }
    if (text.starts_with("plane:")) {
        spec.type = InitialSpec::Type::kPlane;
        spec.n0 = static_cast<int>(parse_int("initial", std::string_view(text).substr(6)));
        return spec;
    }
    if (text.starts_with("custom:") && text.size() > 7) {
        return load_custom_state(text, text.substr(7));
    }
    throw type_error("initial", "cosine, plane:<n> or custom:<path>", text);
}

Kind parse_kind(const std::string &text) {
    static const std::map<std::string, Kind> kinds = {
        {"pp", Kind::kPp},
        {"tp", Kind::kTp},
        {"fotoc", Kind::kFotoc},
        {"energy", Kind::kEnergy},
        {"localization", Kind::kLocalization},
    };
    auto it = kinds.find(text);
    if (it == kinds.end()) {
        throw type_error("kind", "one of pp, tp, fotoc, energy, localization", text);
    }
    return it->second;
}

Method parse_method(const std::string &text) {
    if (text == "decomp") {
        return Method::kDecomp;
    }
    if (text == "norm") {
        return Method::kNorm;
    }
    if (text == "both") {
        return Method::kBoth;
    }
    throw type_error("method", "one of decomp, norm, both", text);
}

Format parse_format(const std::string &text) {
    if (text == "csv") {
        return Format::kCsv;
    }
    if (text == "json") {
        return Format::kJson;
    }
    throw type_error("format", "csv or json", text);
}

}  // namespace

std::vector<int64_t> ExperimentConfig::schedule() const {
    std::vector<int64_t> out;
    for (int64_t t = t_start; t <= t_max; t += t_stride) {
        out.push_back(t);
    }
    return out;
}

const std::vector<std::string> &known_keys() {
    static const std::vector<std::string> keys = {
        "kind", "K", "hbar", "epsilon", "N", "t_max", "t_stride", "t_start", "initial", "method", "out", "format", "tol",
    };
    return keys;
}

std::string canonical_key(std::string_view key) {
    std::string out(key);
    std::replace(out.begin(), out.end(), '-', '_');
    return out;
}

Settings read_config_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw CliError(kExitUsage, fmt::format("cannot read config file '{}'", path.string()));
    }
    Settings settings;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = line;
        body = trim(body.substr(0, body.find('#')));
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw CliError(kExitUsage, fmt::format("{}:{}: expected 'key = value'", path.string(), line_no));
        }
        const std::string key = canonical_key(trim(body.substr(0, eq)));
        const auto &keys = known_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw CliError(kExitUsage, fmt::format("{}:{}: unknown key '{}'", path.string(), line_no, key));
        }
        settings[key] = std::string(trim(body.substr(eq + 1)));
    }
    return settings;
}

double parse_real(std::string_view key, std::string_view text) {
    const std::string_view original = text;
    text = trim(text);
    double value = 0;
    const auto pi_at = text.find("pi");
    if (pi_at == std::string_view::npos) {
        if (!parse_double_exact(text, value)) {
            throw type_error(key, "a number", original);
        }
    } else {
        std::string_view coef = text.substr(0, pi_at);
        std::string_view rest = text.substr(pi_at + 2);
        if (coef.ends_with('*')) {
            coef.remove_suffix(1);
        }
        double c = 1;
        if (coef == "-") {
            c = -1;
        } else if (!coef.empty() && coef != "+" && !parse_double_exact(coef, c)) {
            throw type_error(key, "a number", original);
        }
        double den = 1;
        if (!rest.empty() && (rest.front() != '/' || !parse_double_exact(rest.substr(1), den) || den == 0)) {
            throw type_error(key, "a number", original);
        }
        value = c * std::numbers::pi / den;
    }
    if (!std::isfinite(value)) {
        throw type_error(key, "a finite number", original);
    }
    return value;
}

int64_t parse_int(std::string_view key, std::string_view text) {
    const std::string_view original = text;
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw type_error(key, "an integer", original);
    }
    return value;
}

ExperimentConfig build_config(const Settings &settings) {
    for (const auto &[key, value] : settings) {
        const auto &keys = known_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw CliError(kExitUsage, fmt::format("unknown key '{}'", key));
        }
    }
    auto get = [&](const std::string &key) -> std::optional<std::string> {
        auto it = settings.find(key);
        if (it == settings.end()) {
            return std::nullopt;
        }
        return it->second;
    };
    auto require = [&](const std::string &key) {
        auto v = get(key);
        if (!v) {
            throw CliError(kExitUsage, key + " required");
        }
        return *v;
    };

    ExperimentConfig cfg;
    cfg.kind = parse_kind(require("kind"));
    cfg.K = parse_real("K", require("K"));
    if (cfg.K < 0) {
        throw CliError(kExitUsage, "K must be non-negative");
    }

    const std::string hbar_default = cfg.kind == Kind::kLocalization ? fmt::format("{:.17g}", kLocalizationHbar)
                                                                     : std::string("resonant");
    const std::string hbar_text = get("hbar").value_or(hbar_default);
    if (hbar_text == "resonant") {
        cfg.resonant = true;
        cfg.hbar = qkr_resonant_hbar();
    } else {
        cfg.hbar = parse_real("hbar", hbar_text);
        if (cfg.hbar <= 0) {
            throw CliError(kExitUsage, "hbar must be positive");
        }
    }

    if (auto eps = get("epsilon")) {
        cfg.epsilon = parse_real("epsilon", *eps);
    } else if (cfg.kind == Kind::kTp || cfg.kind == Kind::kFotoc) {
        throw CliError(kExitUsage, "epsilon required for kind " + kind_name(cfg.kind));
    }

    cfg.t_max = parse_int("t_max", require("t_max"));
    if (cfg.t_max < 0) {
        throw CliError(kExitUsage, "t_max must be non-negative");
    }
    cfg.t_stride = parse_int("t_stride", get("t_stride").value_or("1"));
    if (cfg.t_stride < 1) {
        throw CliError(kExitUsage, "t_stride must be at least 1");
    }
    if (auto start = get("t_start")) {
        cfg.t_start = parse_int("t_start", *start);
        if (cfg.t_start < 0) {
            throw CliError(kExitUsage, "t_start must be non-negative");
        }
    } else {
        cfg.t_start = std::min(cfg.t_stride, cfg.t_max);
    }

    cfg.initial = parse_initial(get("initial").value_or("cosine"));
    cfg.method = parse_method(get("method").value_or("decomp"));
    cfg.tol = parse_real("tol", get("tol").value_or("1e-6"));
    if (!(cfg.tol >= 0)) {
        throw CliError(kExitUsage, "tol must be non-negative");
    }

    if (auto format = get("format")) {
        cfg.format = parse_format(*format);
    } else if (auto out = get("out"); out && out->ends_with(".json")) {
        cfg.format = Format::kJson;
    }
    cfg.out = get("out").value_or(kind_name(cfg.kind) + (cfg.format == Format::kJson ? ".json" : ".csv"));

    const std::string n_text = get("N").value_or("auto");
    if (n_text == "auto") {
        int size = 0;
        if (qkr_auto_lattice_size(cfg.K, cfg.hbar, cfg.t_max, &size) != QKR_OK) {
            throw CliError(kExitUsage, fmt::format("N: {}", qkr_last_error()));
        }
        cfg.N = size;
    } else {
        const int64_t n = parse_int("N", n_text);
        if (n < 4 || n % 2 != 0 || n > (int64_t{1} << 24)) {
            throw CliError(kExitUsage, fmt::format("N must be an even integer in [4, 2^24], got {}", n));
        }
        cfg.N = static_cast<int>(n);
        cfg.n_auto = false;
    }
    return cfg;
}

std::string kind_name(Kind kind) {
    switch (kind) {
        case Kind::kPp:
            return "pp";
        case Kind::kTp:
            return "tp";
        case Kind::kFotoc:
            return "fotoc";
        case Kind::kEnergy:
            return "energy";
        case Kind::kLocalization:
            return "localization";
    }
    return "?";
}

std::string method_name(Method method) {
    switch (method) {
        case Method::kDecomp:
            return "decomp";
        case Method::kNorm:
            return "norm";
        case Method::kBoth:
            return "both";
    }
    return "?";
}

nlohmann::ordered_json config_to_json(const ExperimentConfig &c) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(c.kind);
    j["K"] = c.K;
    j["hbar"] = c.hbar;
    j["resonant"] = c.resonant;
    j["epsilon"] = c.epsilon ? nlohmann::ordered_json(*c.epsilon) : nlohmann::ordered_json(nullptr);
    j["N"] = c.N;
    j["N_auto"] = c.n_auto;
    j["t_start"] = c.t_start;
    j["t_max"] = c.t_max;
    j["t_stride"] = c.t_stride;
    j["initial"] = c.initial.text;
    j["method"] = method_name(c.method);
    j["format"] = c.format == Format::kJson ? "json" : "csv";
    j["tol"] = c.tol;
    return j;
}

}  // namespace otoc
