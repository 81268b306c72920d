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

#include "ogm/overlapped.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "ogm/cost.h"
#include "ogm/error.h"
#include "ogm/random.h"
#include "ogm/simplex_minimizer.h"

namespace ogm {

namespace {

std::uint64_t decimal_digits(double value) {
    if (value < 1e18) {
        auto v = static_cast<std::uint64_t>(value);
        std::uint64_t d = 1;
        while (v >= 10) {
            v /= 10;
            d++;
        }
        return d;
    }
    return static_cast<std::uint64_t>(std::floor(std::log10(value))) + 1;
}

void require_terms(const Observable &obs) {
    if (obs.empty()) {
        throw PreconditionError("overlapped grouping needs at least one term");
    }
}

// Normalises the initial weights and lists every term a basis covers as a
// member, so membership and coverage agree (v2 can leave a token-blocked term
// covered but unlisted). Bases and weights are untouched.
void finish_groups(std::vector<Group> &groups, const Observable &obs) {
    double total = 0;
    for (const auto &g : groups) {
        total += g.weight;
    }
    for (auto &g : groups) {
        g.probability = g.weight / total;
        g.members.clear();
        for (std::size_t j = 0; j < obs.size(); j++) {
            if (covers(obs[j].pauli, g.basis)) {
                g.members.push_back(j);
            }
        }
    }
}

CoverageCost build_cost(const std::vector<Group> &groups, const Observable &obs,
                        std::size_t budget) {
    std::size_t m = obs.size();
    std::vector<std::vector<std::size_t>> cover(m);
    std::vector<double> w2(m), penalty(m);
    for (std::size_t j = 0; j < m; j++) {
        for (std::size_t s = 0; s < groups.size(); s++) {
            if (covers(obs[j].pauli, groups[s].basis)) {
                cover[j].push_back(s);
            }
        }
        w2[j] = obs[j].coeff * obs[j].coeff;
        penalty[j] = w2[j] * static_cast<double>(budget);
    }
    return CoverageCost(groups.size(), std::move(cover), std::move(w2), std::move(penalty));
}

MeasurementPlan assemble(std::vector<Group> groups, const std::vector<double> &k,
                         const Observable &obs) {
    MeasurementPlan plan;
    plan.scheme = Scheme::OGM;
    plan.num_qubits = obs.num_qubits();
    for (std::size_t s = 0; s < groups.size(); s++) {
        groups[s].probability = k[s];
    }
    plan.groups = std::move(groups);
    refresh_uncovered(plan, obs);
    return plan;
}

// Quasi-Newton refinement followed by the random kicks.
SimplexResult refine(const CoverageCost &cost, std::vector<double> start,
                     const OptimizerOptions &options, std::mt19937_64 &rng) {
    SimplexResult best =
        minimize_on_simplex(cost, std::move(start), options.tolerance, options.max_iterations);
    std::size_t iterations = best.iterations;
    for (std::size_t kick = 0; kick < options.kicks; kick++) {
        std::vector<double> perturbed = best.k;
        for (auto &v : perturbed) {
            v *= 1.0 + options.kick_size * (2.0 * uniform01(rng) - 1.0);
        }
        auto trial =
            minimize_on_simplex(cost, std::move(perturbed), options.tolerance, options.max_iterations);
        iterations += trial.iterations;
        if (trial.cost < best.cost) {
            best = std::move(trial);
        }
    }
    best.iterations = iterations;
    return best;
}

}  // namespace

std::vector<std::uint64_t> token_budget(const Observable &obs) {
    require_terms(obs);
    double min_weight = std::numeric_limits<double>::infinity();
    for (const auto &t : obs.terms()) {
        min_weight = std::min(min_weight, std::abs(t.coeff));
    }
    std::vector<std::uint64_t> tokens;
    for (const auto &t : obs.terms()) {
        std::uint64_t d = decimal_digits(std::floor(std::abs(t.coeff) / min_weight));
        tokens.push_back(d - 1 >= 62 ? (std::uint64_t{1} << 62) : (std::uint64_t{1} << (d - 1)));
    }
    return tokens;
}

OverlappedSets overlapped_sets_v1(const Observable &obs) {
    require_terms(obs);
    std::size_t m = obs.size();
    std::vector<bool> placed(m, false);
    OverlappedSets out;
    for (std::size_t j = 0; j < m; j++) {
        if (placed[j]) {
            continue;
        }
        Group g{{j}, obs[j].pauli, std::abs(obs[j].coeff), 0.0};
        for (std::size_t k = j + 1; k < m; k++) {
            if (compatible(obs[k].pauli, g.basis)) {
                g.members.push_back(k);
                g.basis = join(g.basis, obs[k].pauli);
                g.weight += std::abs(obs[k].coeff);
            }
        }
        for (std::size_t k = 0; k < j; k++) {
            if (compatible(obs[k].pauli, g.basis)) {
                g.members.push_back(k);
                g.basis = join(g.basis, obs[k].pauli);
            }
        }
        for (auto k : g.members) {
            placed[k] = true;
        }
        out.groups.push_back(std::move(g));
    }
    finish_groups(out.groups, obs);
    return out;
}

OverlappedSets overlapped_sets_v2(const Observable &obs) {
    require_terms(obs);
    std::size_t m = obs.size();
    OverlappedSets out;
    out.tokens = token_budget(obs);
    out.token_phase_appearances.assign(m, 0);
    std::vector<std::uint64_t> appearances(m, 0);
    for (std::size_t j = 0; j < m; j++) {
        if (appearances[j] != 0) {
            continue;
        }
        Group g{{j}, obs[j].pauli, std::abs(obs[j].coeff), 0.0};
        std::vector<bool> in_set(m, false);
        in_set[j] = true;
        appearances[j]++;
        out.token_phase_appearances[j]++;
        for (std::size_t k = 0; k < m; k++) {
            if (k != j && appearances[k] < out.tokens[k] && compatible(obs[k].pauli, g.basis)) {
                g.members.push_back(k);
                g.basis = join(g.basis, obs[k].pauli);
                g.weight += std::abs(obs[k].coeff);
                in_set[k] = true;
                appearances[k]++;
                out.token_phase_appearances[k]++;
            }
        }
        for (std::size_t k = 0; k < j; k++) {
            if (!in_set[k] && compatible(obs[k].pauli, g.basis)) {
                g.members.push_back(k);
                g.basis = join(g.basis, obs[k].pauli);
                in_set[k] = true;
                appearances[k]++;
            }
        }
        out.groups.push_back(std::move(g));
    }
    finish_groups(out.groups, obs);
    return out;
}

PlanDiagnostics make_diagnostics(const MeasurementPlan &plan, const Observable &obs,
                                 std::size_t budget, std::size_t optimizer_iterations) {
    PlanDiagnostics d;
    d.diag_cost = diag_cost(plan, obs);
    d.final_cost = final_cost(plan, obs, budget);
    for (std::size_t j = 0; j < obs.size(); j++) {
        if (coverage_probability(obs[j].pauli, plan) <= 0) {
            d.uncovered_bias_bound += std::abs(obs[j].coeff);
        }
    }
    d.group_count = plan.is_product() ? 0 : plan.groups.size();
    d.optimizer_iterations = optimizer_iterations;
    return d;
}

OptimizedPlan optimize_distribution(std::vector<Group> groups, const Observable &obs,
                                    const OptimizerOptions &options) {
    require_terms(obs);
    if (groups.empty()) {
        throw PreconditionError("cannot optimise a distribution over zero groups");
    }
    if (options.budget < 1) {
        throw PreconditionError("sample budget must be at least 1");
    }
    CoverageCost cost = build_cost(groups, obs, options.budget);
    std::mt19937_64 rng(options.seed);

    std::vector<double> base(groups.size());
    double max_weight = 0;
    for (std::size_t s = 0; s < groups.size(); s++) {
        base[s] = groups[s].weight > 0 ? groups[s].weight : groups[s].probability;
        max_weight = std::max(max_weight, base[s]);
    }
    auto normalised = [](std::vector<double> v) {
        double t = 0;
        for (double x : v) {
            t += x;
        }
        for (double &x : v) {
            x /= t;
        }
        return v;
    };
    std::vector<double> start = normalised(base);
    double start_cost = cost(start);
    for (std::size_t r = 0; r < options.restarts; r++) {
        std::vector<double> candidate(base.size());
        for (std::size_t s = 0; s < base.size(); s++) {
            candidate[s] = base[s] + max_weight * uniform01(rng);
        }
        candidate = normalised(std::move(candidate));
        double c = cost(candidate);
        if (c < start_cost) {
            start_cost = c;
            start = std::move(candidate);
        }
    }
    auto result = refine(cost, std::move(start), options, rng);
    OptimizedPlan out;
    out.plan = assemble(std::move(groups), result.k, obs);
    out.diagnostics = make_diagnostics(out.plan, obs, options.budget, result.iterations);
    return out;
}

OptimizedPlan prune_groups(MeasurementPlan plan, const Observable &obs,
                           const OptimizerOptions &options) {
    if (plan.is_product()) {
        throw PreconditionError("pruning applies to explicit-group plans only");
    }
    if (options.budget < 1) {
        throw PreconditionError("sample budget must be at least 1");
    }
    std::mt19937_64 rng(options.seed ^ 0x5851F42D4C957F2DULL);
    double current = final_cost(plan, obs, options.budget);
    std::size_t iterations = 0;
    while (plan.groups.size() > 1) {
        std::size_t victim = 0;
        for (std::size_t s = 1; s < plan.groups.size(); s++) {
            if (plan.groups[s].probability <= plan.groups[victim].probability) {
                victim = s;
            }
        }
        std::vector<Group> remaining = plan.groups;
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(victim));
        std::vector<double> start(remaining.size());
        double mass = 0;
        for (std::size_t s = 0; s < remaining.size(); s++) {
            start[s] = remaining[s].probability;
            mass += start[s];
        }
        if (!(mass > 0)) {
            std::fill(start.begin(), start.end(), 1.0);
        }
        CoverageCost cost = build_cost(remaining, obs, options.budget);
        auto result = refine(cost, std::move(start), options, rng);
        iterations += result.iterations;
        if (!(result.cost < current)) {
            break;
        }
        current = result.cost;
        plan = assemble(std::move(remaining), result.k, obs);
    }
    refresh_uncovered(plan, obs);
    OptimizedPlan out;
    out.diagnostics = make_diagnostics(plan, obs, options.budget, iterations);
    out.plan = std::move(plan);
    return out;
}

OptimizedPlan plan_ogm(const Observable &obs, OverlapVersion version,
                       const OptimizerOptions &options) {
    auto sets = version == OverlapVersion::V1 ? overlapped_sets_v1(obs) : overlapped_sets_v2(obs);
    auto optimized = optimize_distribution(std::move(sets.groups), obs, options);
    auto pruned = prune_groups(std::move(optimized.plan), obs, options);
    pruned.diagnostics.optimizer_iterations += optimized.diagnostics.optimizer_iterations;
    return pruned;
}

}  // namespace ogm
