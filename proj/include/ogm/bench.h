// Copyright 2026 The OGM Authors
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

#include <cstddef>
#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ogm/observable.h"
#include "ogm/overlapped.h"
#include "ogm/plan.h"
#include "ogm/sampler.h"
#include "ogm/simulator.h"

namespace ogm {

/// Settings shared by the planners that need them.
struct PlannerOptions {
    OptimizerOptions ogm;            // budget, restarts and seed for OGM
    std::size_t lbcs_sweeps = 200;
    std::uint64_t lbcs_seed = 0;
    bool prune = true;
};

/// Planner names: l1, ldf, cs, lbcs, ogm-v1, ogm-v2.
OptimizedPlan build_plan(const std::string &planner, const Observable &obs,
                         const PlannerOptions &options);

enum class SamplingMode { Iid, Derand };
SamplingMode parse_sampling_mode(const std::string &name);

struct BenchOptions {
    /// Planner names plus "external" (requires `external_list`).
    std::vector<std::string> schemes{"l1", "ldf", "lbcs", "ogm-v1"};
    std::vector<std::size_t> budgets{1000};
    std::size_t reps = 100;
    std::uint64_t seed = 0;
    PlannerOptions planner;
    /// OGM and external rows: Derand draws a partially derandomized list and
    /// uses the fixed-list estimator; Iid draws i.i.d. from K.
    SamplingMode ogm_sampling = SamplingMode::Derand;
    std::optional<FixedMeasurementList> external_list;
    std::size_t threads = 0;  // 0: hardware concurrency
};

struct PhaseTimes {
    double plan = 0, sample = 0, run = 0, estimate = 0;  // seconds, summed over reps
};

struct BenchRow {
    std::string scheme;
    double diag_cost = 0;
    double analytic_variance = 0;  // single shot, uncovered terms excluded
    std::vector<double> rmse;      // one per budget
    double bias_bound = 0;         // Σ|α| over uncovered terms
    std::size_t group_count = 0;
    PhaseTimes times;
};

struct BenchReport {
    double truth = 0;
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> budgets;
    std::vector<BenchRow> rows;
};

BenchReport run_benchmark(const Observable &obs, const StateVector &state,
                          const BenchOptions &options);

/// Timings vary between runs, so they are only written when asked for.
nlohmann::json bench_to_json(const BenchReport &report, bool include_times = false);
std::string format_bench_table(const BenchReport &report);

}  // namespace ogm
