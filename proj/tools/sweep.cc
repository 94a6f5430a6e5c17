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


#include "sweep.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <thread>

#include "experiment.h"
#include "fmt/format.h"
#include "qkr/qkr_c.h"

namespace otoc {

namespace {

struct Job {
    std::string text;
    std::optional<double> value;
    std::optional<ExperimentConfig> config;
    std::optional<RunResult> result;
    int exit_code = kExitOk;
    std::string error;
};

double axis_value(const std::string &axis, const std::string &text) {
    if (axis == "N") {
        return static_cast<double>(parse_int(axis, text));
    }
    if (axis == "hbar" && text == "resonant") {
        return qkr_resonant_hbar();
    }
    return parse_real(axis, text);
}

void run_job(const Settings &base, const std::string &axis, const std::filesystem::path &out, Format format,
             size_t index, Job &job) {
    try {
        job.value = axis_value(axis, job.text);
        Settings settings = base;
        settings[axis] = job.text;
        settings["out"] = sibling_path(out, fmt::format("{}{}", axis, index)).string();
        settings["format"] = format == Format::kJson ? "json" : "csv";
        job.config = build_config(settings);
        job.result = run_experiment(*job.config);
        job.exit_code = job.result->exit_code;
    } catch (const CliError &e) {
        job.exit_code = e.exit_code();
        job.error = e.what();
    } catch (const std::exception &e) {
        job.exit_code = kExitGuard;
        job.error = e.what();
    }
}

struct Convergence {
    bool pass = false;
    double max_spread = 0;
    int jobs = 0;
    std::string note;
};

// C must settle as N grows: successive differences never grow (beyond the
// tolerance) and every successful N agrees with the largest one.
Convergence check_convergence(const std::vector<const Job *> &ordered) {
    Convergence out;
    std::vector<const Job *> ok;
    for (const Job *job : ordered) {
        if (job->result) {
            ok.push_back(job);
        }
    }
    out.jobs = static_cast<int>(ok.size());
    if (ok.size() < 2) {
        out.note = "fewer than two lattice sizes completed";
        return out;
    }
    out.pass = true;
    const auto &last = ok.back()->result->table.rows;
    for (size_t r = 0; r < last.size(); ++r) {
        const double ref = std::get<double>(last[r][1]);
        const double scale = std::max(1.0, std::abs(ref));
        double previous_step = INFINITY;
        for (size_t k = 0; k < ok.size(); ++k) {
            const double c = std::get<double>(ok[k]->result->table.rows[r][1]);
            out.max_spread = std::max(out.max_spread, std::abs(c - ref) / scale);
            if (k + 1 < ok.size()) {
                const double next = std::get<double>(ok[k + 1]->result->table.rows[r][1]);
                const double step = std::abs(next - c) / scale;
                if (step > previous_step + kConvergenceTolerance) {
                    out.pass = false;
                }
                previous_step = step;
            }
        }
    }
    if (out.max_spread > kConvergenceTolerance) {
        out.pass = false;
    }
    return out;
}

}  // namespace

int resolve_workers(int requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("OTOC_WORKERS")) {
        const int64_t n = parse_int("OTOC_WORKERS", env);
        if (n < 1) {
            throw CliError(kExitUsage, "OTOC_WORKERS must be at least 1");
        }
        return static_cast<int>(n);
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

SweepResult run_sweep(const Settings &base, const SweepOptions &options) {
    static const std::vector<std::string> axes = {"K", "epsilon", "hbar", "N"};
    if (std::find(axes.begin(), axes.end(), options.axis) == axes.end()) {
        throw CliError(kExitUsage, fmt::format("axis must be one of K, epsilon, hbar, N; got '{}'", options.axis));
    }
    if (options.values.empty()) {
        throw CliError(kExitUsage, "sweep needs at least one value");
    }
    auto kind_it = base.find("kind");
    if (kind_it == base.end()) {
        throw CliError(kExitUsage, "kind required");
    }
    Format format = Format::kCsv;
    if (auto f = base.find("format"); f != base.end()) {
        if (f->second != "csv" && f->second != "json") {
            throw CliError(kExitUsage, fmt::format("format: expected csv or json, got '{}'", f->second));
        }
        format = f->second == "json" ? Format::kJson : Format::kCsv;
    } else if (auto o = base.find("out"); o != base.end() && o->second.ends_with(".json")) {
        format = Format::kJson;
    }
    std::filesystem::path out;
    if (auto o = base.find("out"); o != base.end()) {
        out = o->second;
    } else {
        out = fmt::format("{}_sweep_{}.{}", kind_it->second, options.axis, format == Format::kJson ? "json" : "csv");
    }

    std::vector<Job> jobs(options.values.size());
    for (size_t i = 0; i < jobs.size(); ++i) {
        jobs[i].text = options.values[i];
    }
    const int workers = std::min<int>(resolve_workers(options.workers), static_cast<int>(jobs.size()));
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (size_t i = next++; i < jobs.size(); i = next++) {
                run_job(base, options.axis, out, format, i, jobs[i]);
            }
        });
    }
    for (auto &thread : pool) {
        thread.join();
    }

    std::vector<const Job *> ordered;
    for (const auto &job : jobs) {
        ordered.push_back(&job);
    }
    std::stable_sort(ordered.begin(), ordered.end(), [](const Job *a, const Job *b) {
        if (a->value && b->value) {
            return *a->value < *b->value;
        }
        return a->value.has_value() && !b->value.has_value();
    });

    SweepResult result;
    Table summary;
    size_t width = 0;
    for (const Job *job : ordered) {
        if (job->result) {
            summary.columns = job->result->table.columns;
            width = summary.columns.size();
            break;
        }
    }
    if (summary.columns.empty()) {
        summary.columns = {"t"};
        width = 1;
    }
    summary.columns.insert(summary.columns.begin(), options.axis);
    summary.columns.push_back("status");

    auto jobs_json = nlohmann::ordered_json::array();
    std::optional<double> max_rel_err;
    bool all_pass = true;
    int worst_exit = kExitOk;
    int failed_jobs = 0;
    int guard_failures = 0;
    for (const Job *job : ordered) {
        const Cell value = job->value ? Cell(*job->value) : Cell(job->text);
        nlohmann::ordered_json entry;
        entry["value"] = job->text;
        if (job->result) {
            const RunResult &r = *job->result;
            const std::string status = r.pass ? "ok" : "verification failed";
            for (const auto &row : r.table.rows) {
                std::vector<Cell> line = {value};
                line.insert(line.end(), row.begin(), row.end());
                line.push_back(status);
                summary.rows.push_back(std::move(line));
            }
            if (r.max_rel_err) {
                max_rel_err = std::max(max_rel_err.value_or(0), *r.max_rel_err);
            }
            all_pass = all_pass && r.pass;
            worst_exit = std::max(worst_exit, r.exit_code);
            entry["status"] = status;
            entry["file"] = job->config->out.string();
            entry["max_rel_err"] = r.max_rel_err ? nlohmann::ordered_json(*r.max_rel_err) : nlohmann::ordered_json();
            result.messages.push_back(fmt::format(
                "{} = {}: {}{}", options.axis, job->text, status,
                r.max_rel_err ? fmt::format(", max rel_err {:.3g}", *r.max_rel_err) : std::string()));
        } else {
            ++failed_jobs;
            std::vector<Cell> line = {value};
            line.insert(line.end(), width, std::monostate{});
            line.push_back("error: " + job->error);
            summary.rows.push_back(std::move(line));
            entry["status"] = "error";
            entry["error"] = job->error;
            if (job->exit_code == kExitGuard) {
                ++guard_failures;
            } else {
                worst_exit = std::max(worst_exit, job->exit_code);
            }
            result.messages.push_back(fmt::format("{} = {}: error: {}", options.axis, job->text, job->error));
        }
        entry["exit_code"] = job->exit_code;
        jobs_json.push_back(std::move(entry));
    }

    nlohmann::ordered_json summary_json;
    summary_json["jobs"] = static_cast<int>(jobs.size());
    summary_json["failed_jobs"] = failed_jobs;
    summary_json["max_rel_err"] = max_rel_err ? nlohmann::ordered_json(*max_rel_err) : nlohmann::ordered_json();

    // Undersized lattices are expected to trip the leakage guard in an N
    // sweep; elsewhere a guard abort fails the sweep.
    const bool n_axis = options.axis == "N";
    if (guard_failures > 0 && !(n_axis && failed_jobs < static_cast<int>(jobs.size()))) {
        worst_exit = std::max(worst_exit, kExitGuard);
    }
    if (n_axis && guard_failures < static_cast<int>(jobs.size())) {
        const Convergence conv = check_convergence(ordered);
        summary_json["convergence"] = {
            {"pass", conv.pass}, {"max_spread", conv.max_spread}, {"lattice_sizes", conv.jobs}};
        if (!conv.note.empty()) {
            summary_json["convergence"]["note"] = conv.note;
        }
        result.messages.push_back(fmt::format(
            "convergence over N: {} (max relative spread {:.3g} over {} sizes){}", conv.pass ? "pass" : "FAIL",
            conv.max_spread, conv.jobs, conv.note.empty() ? "" : "; " + conv.note));
        if (!conv.pass) {
            all_pass = false;
            worst_exit = std::max(worst_exit, kExitVerify);
        }
    }
    summary_json["pass"] = all_pass && worst_exit == kExitOk;

    if (format == Format::kCsv) {
        write_text_file(out, to_csv(summary));
    } else {
        nlohmann::ordered_json doc;
        nlohmann::ordered_json config;
        config["axis"] = options.axis;
        config["values"] = options.values;
        config["template"] = base;
        doc["config"] = config;
        doc["rows"] = to_json_rows(summary);
        doc["jobs"] = jobs_json;
        doc["summary"] = summary_json;
        write_text_file(out, doc.dump(2) + "\n");
    }
    result.messages.push_back(fmt::format("wrote {} ({} rows from {} jobs, {} worker{})", out.string(),
                                          summary.rows.size(), jobs.size(), workers, workers == 1 ? "" : "s"));
    result.exit_code = worst_exit;
    return result;
}

}  // namespace otoc
