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


#include "cli.h"

#include "CLI11.hpp"
#include "config.h"
#include "experiment.h"
#include "sweep.h"
#include "verify.h"

namespace otoc {

namespace {

struct ExperimentFlags {
    std::string config_path;
    Settings flags;

    Settings merged() const {
        Settings settings;
        if (!config_path.empty()) {
            settings = read_config_file(config_path);
        }
        for (const auto &[key, value] : flags) {
            settings[key] = value;
        }
        return settings;
    }
};

void add_experiment_options(CLI::App *app, ExperimentFlags &target) {
    app->add_option("--config", target.config_path, "key = value file; flags override it");
    const std::pair<const char *, const char *> options[] = {
        {"--kind", "pp | tp | fotoc | energy | localization"},
        {"--K", "kick strength"},
        {"--hbar", "effective Planck constant, or 'resonant' for exactly 4 pi"},
        {"--epsilon", "translation distance (tp, fotoc); accepts forms like pi/2"},
        {"--N", "lattice size, or 'auto'"},
        {"--t-max", "last kick number"},
        {"--t-stride", "kicks between samples (default 1)"},
        {"--t-start", "first sampled kick (default: the stride)"},
        {"--initial", "cosine | plane:<n> | custom:<path>"},
        {"--method", "decomp | norm | both"},
        {"--out", "output path"},
        {"--format", "csv | json (default from --out extension)"},
        {"--tol", "verification tolerance (default 1e-6)"},
    };
    for (const auto &[name, help] : options) {
        const std::string key = canonical_key(std::string(name).substr(2));
        app->add_option_function<std::string>(
            name, [&target, key](const std::string &value) { target.flags[key] = value; }, help);
    }
}

void print(std::ostream &out, const std::vector<std::string> &lines) {
    for (const auto &line : lines) {
        out << line << "\n";
    }
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Out-of-time-ordered correlators of the quantum kicked rotor"};
    app.name("otoc");
    app.require_subcommand(1);

    ExperimentFlags run_flags;
    auto *run = app.add_subcommand("run", "run one experiment and write its data file");
    add_experiment_options(run, run_flags);

    ExperimentFlags sweep_flags;
    SweepOptions sweep_options;
    auto *sweep = app.add_subcommand("sweep", "run one experiment per value of a parameter and merge the results");
    add_experiment_options(sweep, sweep_flags);
    sweep->add_option("--axis", sweep_options.axis, "K | epsilon | hbar | N")->required();
    sweep->add_option("--values", sweep_options.values, "comma separated values")->required()->delimiter(',');
    sweep->add_option("--workers", sweep_options.workers, "worker threads (default OTOC_WORKERS or all cores)");

    std::vector<std::string> reports;
    auto *verify = app.add_subcommand("verify", "check verification reports written by run");
    verify->add_option("reports", reports, "report files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) {
            const ExperimentConfig config = build_config(run_flags.merged());
            const RunResult result = run_experiment(config);
            print(out, result.messages);
            return result.exit_code;
        }
        if (sweep->parsed()) {
            const SweepResult result = run_sweep(sweep_flags.merged(), sweep_options);
            print(out, result.messages);
            return result.exit_code;
        }
        std::vector<std::filesystem::path> paths(reports.begin(), reports.end());
        const VerifyResult result = verify_reports(paths);
        print(result.exit_code == kExitOk ? out : err, result.messages);
        return result.exit_code;
    } catch (const CliError &e) {
        err << "error: " << e.what() << "\n";
        return e.exit_code();
    }
}

}  // namespace otoc
