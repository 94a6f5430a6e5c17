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

#include "config.h"

namespace otoc {

struct SweepOptions {
    /// One of K, epsilon, hbar, N.
    std::string axis;
    std::vector<std::string> values;
    /// 0 picks OTOC_WORKERS or the available parallelism.
    int workers = 0;
};

struct SweepResult {
    int exit_code = kExitOk;
    std::vector<std::string> messages;
};

/// Tolerance for the truncation-convergence check of an N sweep.
inline constexpr double kConvergenceTolerance = 1e-10;

int resolve_workers(int requested);

/// Runs one experiment per axis value on a bounded worker pool, then merges
/// the per-job tables into a summary keyed by (value, t). Failed jobs are
/// recorded in the summary and do not stop the others.
SweepResult run_sweep(const Settings &base, const SweepOptions &options);

}  // namespace otoc
