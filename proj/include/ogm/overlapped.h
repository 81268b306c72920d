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
#include <vector>

#include "ogm/observable.h"
#include "ogm/plan.h"

namespace ogm {

/// Per-term visit tokens U_k = 2^(d-1), d = decimal digit count of
/// floor(|coeff_k| / min_j |coeff_j|). Saturates at 2^62.
std::vector<std::uint64_t> token_budget(const Observable &obs);

struct OverlappedSets {
    /// Groups in creation order; `weight` holds the initial (unnormalised)
    /// weight and `probability` its normalised value.
    std::vector<Group> groups;
    /// v2 only: per-term number of sets joined while tokens were charged
    /// (seed placement included). Empty for v1.
    std::vector<std::uint64_t> token_phase_appearances;
    std::vector<std::uint64_t> tokens;
};

/// Overlapped set generation, first version.
///
/// Seeds each new set with the heaviest term not yet in any set, absorbs
/// later (lighter) compatible terms while growing the basis by join, fixes the
/// set's initial weight at the summed |coeff| of its members, then absorbs
/// earlier compatible terms. Every term ends up in at least one set, and a
/// term is a member of a set exactly when the set's basis covers it.
OverlappedSets overlapped_sets_v1(const Observable &obs);

/// Token-bounded variant: the absorb scan visits every other term, and a term
/// may join while fewer than U_k sets contain it. Earlier terms still
/// compatible with the finished basis are then added without token charge.
OverlappedSets overlapped_sets_v2(const Observable &obs);

struct PlanDiagnostics {
    double diag_cost = 0.0;   // +inf when some term is uncovered
    double final_cost = 0.0;  // penalised cost at the configured budget
    double uncovered_bias_bound = 0.0;
    std::size_t group_count = 0;
    std::size_t optimizer_iterations = 0;
};

struct OptimizerOptions {
    std::size_t budget = 1000;  // intended number of samples T
    std::size_t restarts = 10;
    std::uint64_t seed = 0;
    double tolerance = 1e-8;
    std::size_t max_iterations = 5000;
    std::size_t kicks = 3;
    double kick_size = 1e-2;
};

struct OptimizedPlan {
    MeasurementPlan plan;
    PlanDiagnostics diagnostics;
};

PlanDiagnostics make_diagnostics(const MeasurementPlan &plan, const Observable &obs,
                                 std::size_t budget, std::size_t optimizer_iterations = 0);

/// Optimises the group probabilities against final_cost.
///
/// Candidates are the groups' own initial weights plus `restarts` random
/// perturbations (each weight drawn from [w_s, w_s + max_s w_s] and
/// normalised). The cheapest candidate is refined by a quasi-Newton search
/// over softmax parameters, then kicked `kicks` times by a random relative
/// perturbation of size `kick_size` and re-refined, keeping the best.
OptimizedPlan optimize_distribution(std::vector<Group> groups, const Observable &obs,
                                    const OptimizerOptions &options);

/// Greedily deletes the lowest-probability group, re-optimises, and keeps the
/// deletion only while final_cost strictly decreases. Terms left without a
/// covering basis move to `uncovered`.
OptimizedPlan prune_groups(MeasurementPlan plan, const Observable &obs,
                           const OptimizerOptions &options);

enum class OverlapVersion { V1, V2 };

/// Set generation, distribution optimisation and pruning in one call.
OptimizedPlan plan_ogm(const Observable &obs, OverlapVersion version,
                       const OptimizerOptions &options);

}  // namespace ogm
