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


#include "experiment.h"

#include <algorithm>
#include <cmath>
#include <memory>

#include "fmt/format.h"
#include "qkr/qkr_c.h"

namespace otoc {

namespace {

int exit_code_for(qkr_status status) {
    switch (status) {
        case QKR_ERR_LEAKAGE:
        case QKR_ERR_RESOLUTION:
        case QKR_ERR_UNNORMALIZED:
        case QKR_ERR_INTERNAL:
            return kExitGuard;
        default:
            return kExitUsage;
    }
}

void check(qkr_status status) {
    if (status != QKR_OK) {
        throw CliError(exit_code_for(status), qkr_last_error());
    }
}

struct StateDeleter {
    void operator()(qkr_state *s) const {
        qkr_state_destroy(s);
    }
};
struct FloquetDeleter {
    void operator()(qkr_floquet *f) const {
        qkr_floquet_destroy(f);
    }
};
using StatePtr = std::unique_ptr<qkr_state, StateDeleter>;
using FloquetPtr = std::unique_ptr<qkr_floquet, FloquetDeleter>;

StatePtr make_state(const ExperimentConfig &cfg) {
    qkr_state *raw = nullptr;
    const InitialSpec &init = cfg.initial;
    switch (init.type) {
        case InitialSpec::Type::kCosine:
            check(qkr_state_cosine(cfg.N, cfg.hbar, &raw));
            break;
        case InitialSpec::Type::kPlane:
            check(qkr_state_plane(cfg.N, cfg.hbar, init.n0, &raw));
            break;
        case InitialSpec::Type::kCustom:
            check(qkr_state_custom(
                cfg.N, cfg.hbar, init.indices.data(), init.re.data(), init.im.data(), init.indices.size(), &raw));
            break;
    }
    return StatePtr(raw);
}

FloquetPtr make_floquet(const ExperimentConfig &cfg) {
    qkr_floquet *raw = nullptr;
    check(qkr_floquet_create(cfg.K, cfg.hbar, cfg.N, cfg.resonant ? QKR_RESONANT_ON : QKR_RESONANT_OFF, &raw));
    return FloquetPtr(raw);
}

std::vector<qkr_otoc_sample> otoc_series(
    const ExperimentConfig &cfg, const qkr_floquet *ops, const qkr_state *psi0, const std::vector<int64_t> &times,
    qkr_method method) {
    qkr_otoc_kind kind = QKR_OTOC_PP;
    if (cfg.kind == Kind::kTp) {
        kind = QKR_OTOC_TP;
    } else if (cfg.kind == Kind::kFotoc) {
        kind = QKR_OTOC_FOTOC;
    }
    std::vector<qkr_otoc_sample> out(times.size());
    check(qkr_otoc_series(ops, kind, cfg.epsilon.value_or(0), psi0, times.data(), times.size(), method, out.data()));
    return out;
}

bool methods_agree(double decomposition, double norm) {
    if (norm < 1) {
        return std::abs(decomposition - norm) < 1e-10;
    }
    return std::abs(decomposition - norm) / norm < 1e-8;
}

std::optional<double> closed_form(const ExperimentConfig &cfg, int64_t t) {
    if (!cfg.resonant || cfg.initial.type != InitialSpec::Type::kCosine) {
        return std::nullopt;
    }
    const double td = static_cast<double>(t);
    if (cfg.kind == Kind::kPp) {
        return qkr_cp_closed(cfg.K, td);
    }
    if (cfg.kind == Kind::kTp) {
        return qkr_ct_closed(cfg.K, td, *cfg.epsilon);
    }
    return std::nullopt;
}

void run_otoc(const ExperimentConfig &cfg, const qkr_floquet *ops, const qkr_state *psi0, RunResult &result) {
    const auto times = cfg.schedule();
    const bool fotoc = cfg.kind == Kind::kFotoc;
    result.table.columns = {"t", "C", "C1", "C2", "ReC3", "ImC3", "C_theory", "rel_err"};
    if (fotoc) {
        result.table.columns.push_back("F_O");
        result.table.columns.push_back("C_approx");
    }

    std::vector<qkr_otoc_sample> primary;
    std::vector<qkr_otoc_sample> norm;
    if (cfg.method == Method::kNorm) {
        primary = otoc_series(cfg, ops, psi0, times, QKR_METHOD_COMMUTATOR_NORM);
    } else {
        primary = otoc_series(cfg, ops, psi0, times, QKR_METHOD_DECOMPOSITION);
    }
    if (cfg.method == Method::kBoth) {
        norm = otoc_series(cfg, ops, psi0, times, QKR_METHOD_COMMUTATOR_NORM);
        double worst = 0;
        bool agree = true;
        for (size_t i = 0; i < times.size(); ++i) {
            const double d = primary[i].c;
            const double n = norm[i].c;
            worst = std::max(worst, std::abs(d - n) / std::max(1.0, std::abs(n)));
            agree = agree && methods_agree(d, n);
        }
        result.summary["method_agreement"] = {{"max_scaled_diff", worst}, {"pass", agree}};
        result.messages.push_back(
            fmt::format("method agreement: max scaled difference {:.3g} ({})", worst, agree ? "pass" : "FAIL"));
        result.pass = result.pass && agree;
    }

    for (size_t i = 0; i < times.size(); ++i) {
        const qkr_otoc_sample &s = primary[i];
        std::vector<Cell> row = {s.t, s.c};
        if (s.has_components) {
            row.insert(row.end(), {s.c1, s.c2, s.re_c3, s.im_c3});
        } else {
            row.insert(row.end(), 4, std::monostate{});
        }
        const auto theory = closed_form(cfg, s.t);
        if (theory) {
            auto v = make_verification_row(s.t, s.c, *theory, cfg.tol);
            result.verification.push_back(v);
            row.push_back(*theory);
            row.push_back(number_or_empty(v.rel_err));
        } else {
            row.insert(row.end(), 2, std::monostate{});
        }
        if (fotoc) {
            row.push_back(s.has_fidelity ? Cell(s.fidelity) : Cell());
            row.push_back(std::pow(*cfg.epsilon / cfg.hbar, 2) * s.p2);
        }
        result.table.rows.push_back(std::move(row));
    }
}

void run_energy(const ExperimentConfig &cfg, const qkr_floquet *ops, const qkr_state *psi0, RunResult &result) {
    const auto times = cfg.schedule();
    std::vector<qkr_energy_sample> samples(times.size());
    check(qkr_energy_series(ops, psi0, times.data(), times.size(), samples.data()));
    result.table.columns = {"t", "p2", "p_mean", "p2_theory", "rel_err"};
    const bool theory = cfg.resonant && cfg.initial.type == InitialSpec::Type::kCosine;
    for (const auto &s : samples) {
        std::vector<Cell> row = {s.t, s.p2, s.p_mean};
        if (theory) {
            // The cosine state starts at <p^2> = hbar^2 and gains (K t)^2 / 4.
            const double t = static_cast<double>(s.t);
            const double want = cfg.K * cfg.K * t * t / 4 + cfg.hbar * cfg.hbar;
            row.push_back(want);
            row.push_back(std::abs(s.p2 - want) / want);
        } else {
            row.insert(row.end(), 2, std::monostate{});
        }
        result.table.rows.push_back(std::move(row));
    }
}

void localization_report(const ExperimentConfig &cfg, RunResult &result) {
    std::vector<int64_t> t;
    std::vector<double> c;
    for (const auto &row : result.table.rows) {
        t.push_back(std::get<int64_t>(row[0]));
        c.push_back(std::get<double>(row[1]));
    }
    const int64_t from = cfg.t_max / 2;
    const auto exponent = fit_growth_exponent(t, c, from, cfg.t_max);
    double sum = 0;
    double lo = INFINITY;
    double hi = -INFINITY;
    int points = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= from) {
            sum += c[i];
            lo = std::min(lo, c[i]);
            hi = std::max(hi, c[i]);
            ++points;
        }
    }
    nlohmann::ordered_json report;
    report["window"] = {from, cfg.t_max};
    report["points"] = points;
    report["fit_exponent"] = exponent ? nlohmann::ordered_json(*exponent) : nlohmann::ordered_json(nullptr);
    report["mean_C"] = points ? nlohmann::ordered_json(sum / points) : nlohmann::ordered_json(nullptr);
    report["min_C"] = points ? nlohmann::ordered_json(lo) : nlohmann::ordered_json(nullptr);
    report["max_C"] = points ? nlohmann::ordered_json(hi) : nlohmann::ordered_json(nullptr);
    report["sub_quadratic"] = exponent ? nlohmann::ordered_json(*exponent < 0.5) : nlohmann::ordered_json(nullptr);
    result.summary["localization"] = report;
    if (exponent) {
        result.messages.push_back(fmt::format(
            "late-time growth exponent over t in [{}, {}]: {:.4g} ({})", from, cfg.t_max, *exponent,
            *exponent < 0.5 ? "sub-quadratic, localized" : "not localized"));
    } else {
        result.messages.push_back("late-time window has fewer than two usable points; no exponent fitted");
    }
}

void write_document(const std::filesystem::path &path, Format format, const ExperimentConfig &cfg, const Table &table,
                    const nlohmann::ordered_json &summary) {
    if (format == Format::kCsv) {
        write_text_file(path, to_csv(table));
        return;
    }
    nlohmann::ordered_json doc;
    doc["config"] = config_to_json(cfg);
    doc["rows"] = to_json_rows(table);
    doc["summary"] = summary;
    write_text_file(path, doc.dump(2) + "\n");
}

}  // namespace

VerificationRow make_verification_row(int64_t t, double numeric, double theory, double tol) {
    VerificationRow row;
    row.t = t;
    row.c_numeric = numeric;
    row.c_theory = theory;
    row.abs_err = std::abs(numeric - theory);
    if (theory != 0) {
        row.rel_err = row.abs_err / std::abs(theory);
        row.pass = *row.rel_err <= tol;
    } else {
        row.pass = row.abs_err <= tol;
    }
    return row;
}

Table verification_table(const std::vector<VerificationRow> &rows) {
    Table table;
    table.columns = {"t", "C_numeric", "C_theory", "abs_err", "rel_err", "pass"};
    for (const auto &r : rows) {
        table.rows.push_back({r.t, r.c_numeric, r.c_theory, r.abs_err, number_or_empty(r.rel_err), r.pass});
    }
    return table;
}

std::filesystem::path sibling_path(const std::filesystem::path &out, std::string_view tag) {
    std::filesystem::path p = out;
    p.replace_filename(fmt::format("{}.{}{}", out.stem().string(), tag, out.extension().string()));
    return p;
}

std::optional<double> fit_growth_exponent(const std::vector<int64_t> &t, const std::vector<double> &c, int64_t t_from,
                                          int64_t t_to) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] < t_from || t[i] > t_to || t[i] <= 0 || !(c[i] > 0)) {
            continue;
        }
        const double x = std::log(static_cast<double>(t[i]));
        const double y = std::log(c[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    const double denom = n * sxx - sx * sx;
    if (n < 2 || denom <= 0) {
        return std::nullopt;
    }
    return (n * sxy - sx * sy) / denom;
}

RunResult run_experiment(const ExperimentConfig &cfg) {
    RunResult result;
    result.summary = nlohmann::ordered_json::object();
    const StatePtr psi0 = make_state(cfg);
    const FloquetPtr ops = make_floquet(cfg);

    if (cfg.kind == Kind::kEnergy) {
        run_energy(cfg, ops.get(), psi0.get(), result);
    } else {
        run_otoc(cfg, ops.get(), psi0.get(), result);
    }
    if (cfg.kind == Kind::kLocalization) {
        localization_report(cfg, result);
    }

    bool verified = true;
    for (const auto &row : result.verification) {
        verified = verified && row.pass;
        if (row.rel_err) {
            result.max_rel_err = std::max(result.max_rel_err.value_or(0), *row.rel_err);
        }
    }
    result.pass = result.pass && verified;
    result.summary["max_rel_err"] =
        result.max_rel_err ? nlohmann::ordered_json(*result.max_rel_err) : nlohmann::ordered_json(nullptr);
    result.summary["pass"] = result.pass;

    write_document(cfg.out, cfg.format, cfg, result.table, result.summary);
    result.files.push_back(cfg.out);
    result.messages.insert(result.messages.begin(), fmt::format("wrote {} ({} rows)", cfg.out.string(),
                                                                result.table.rows.size()));
    if (!result.verification.empty()) {
        const auto report = sibling_path(cfg.out, "verify");
        nlohmann::ordered_json summary;
        summary["max_rel_err"] = result.summary["max_rel_err"];
        summary["pass"] = verified;
        write_document(report, cfg.format, cfg, verification_table(result.verification), summary);
        result.files.push_back(report);
        const auto failing = std::count_if(result.verification.begin(), result.verification.end(),
                                           [](const VerificationRow &r) { return !r.pass; });
        result.messages.push_back(fmt::format(
            "wrote {}: {} rows, {} failing, max rel_err {} (tol {:g})", report.string(), result.verification.size(),
            failing, result.max_rel_err ? fmt::format("{:.3g}", *result.max_rel_err) : std::string("n/a"), cfg.tol));
    }
    result.exit_code = result.pass ? kExitOk : kExitVerify;
    return result;
}

}  // namespace otoc
