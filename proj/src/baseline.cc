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

#include "ogm/baseline.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "ogm/cost.h"
#include "ogm/error.h"

namespace ogm {

MeasurementPlan l1_plan(const Observable &obs) {
    if (obs.empty()) {
        throw PreconditionError("cannot build a measurement plan for an observable without terms");
    }
    MeasurementPlan plan;
    plan.scheme = Scheme::L1;
    plan.num_qubits = obs.num_qubits();
    double norm = obs.l1_norm();
    for (std::size_t j = 0; j < obs.size(); j++) {
        double w = std::abs(obs[j].coeff);
        plan.groups.push_back({{j}, obs[j].pauli, w, w / norm});
    }
    return plan;
}

std::vector<Group> ldf_grouping(const Observable &obs) {
    if (obs.empty()) {
        throw PreconditionError("cannot group an observable without terms");
    }
    std::size_t m = obs.size();
    std::vector<std::vector<bool>> conflict(m, std::vector<bool>(m, false));
    std::vector<std::size_t> degree(m, 0);
    for (std::size_t a = 0; a < m; a++) {
        for (std::size_t b = a + 1; b < m; b++) {
            if (!compatible(obs[a].pauli, obs[b].pauli)) {
                conflict[a][b] = conflict[b][a] = true;
                degree[a]++;
                degree[b]++;
            }
        }
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    // Terms are already canonically ordered, so a stable sort by degree
    // applies the canonical tie-break.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

    std::vector<Group> groups;
    for (auto v : order) {
        bool placed = false;
        for (auto &g : groups) {
            bool clash = std::any_of(g.members.begin(), g.members.end(),
                                     [&](std::size_t u) { return conflict[u][v]; });
            if (!clash) {
                g.members.push_back(v);
                g.basis = join(g.basis, obs[v].pauli);
                g.weight += std::abs(obs[v].coeff);
                placed = true;
                break;
            }
        }
        if (!placed) {
            groups.push_back({{v}, obs[v].pauli, std::abs(obs[v].coeff), 0.0});
        }
    }
    return groups;
}

MeasurementPlan grouping_plan(std::vector<Group> groups, const Observable &obs) {
    if (groups.empty()) {
        throw PreconditionError("grouping plan needs at least one group");
    }
    std::vector<int> seen(obs.size(), 0);
    for (auto &g : groups) {
        g.weight = 0;
        for (auto j : g.members) {
            if (j >= obs.size()) {
                throw PreconditionError("group member index out of range");
            }
            if (!covers(obs[j].pauli, g.basis)) {
                throw PreconditionError("group member " + obs[j].pauli.str() +
                                        " is not covered by basis " + g.basis.str());
            }
            seen[j]++;
            g.weight += std::abs(obs[j].coeff);
        }
    }
    for (std::size_t j = 0; j < obs.size(); j++) {
        if (seen[j] != 1) {
            throw PreconditionError(
                "groups do not partition the terms: term " + obs[j].pauli.str() + " appears " +
                std::to_string(seen[j]) + " times");
        }
    }
    MeasurementPlan plan;
    plan.scheme = Scheme::LDF;
    plan.num_qubits = obs.num_qubits();
    double norm = obs.l1_norm();
    for (auto &g : groups) {
        g.probability = g.weight / norm;
    }
    plan.groups = std::move(groups);
    return plan;
}

MeasurementPlan cs_uniform_plan(std::size_t num_qubits) {
    if (num_qubits < 1) {
        throw PreconditionError("classical shadows need at least one qubit");
    }
    MeasurementPlan plan;
    plan.scheme = Scheme::CSUniform;
    plan.num_qubits = num_qubits;
    plan.product_dist = std::vector<LetterDistribution>(num_qubits, {1.0 / 3, 1.0 / 3, 1.0 / 3});
    return plan;
}

MeasurementPlan lbcs_optimize(const Observable &obs, std::size_t max_sweeps, std::uint64_t seed,
                              std::vector<double> *cost_trace) {
    if (obs.empty()) {
        throw PreconditionError("cannot optimise shadows for an observable without terms");
    }
    std::size_t n = obs.num_qubits();
    MeasurementPlan plan = cs_uniform_plan(n);
    plan.scheme = Scheme::LBCS;
    auto &dist = *plan.product_dist;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);

    double cost = diag_cost(plan, obs);
    if (cost_trace) {
        cost_trace->push_back(cost);
    }
    for (std::size_t sweep = 0; sweep < max_sweeps; sweep++) {
        std::shuffle(order.begin(), order.end(), rng);
        double before = cost;
        for (auto k : order) {
            LetterDistribution c{0, 0, 0};
            for (const auto &t : obs.terms()) {
                char letter = t.pauli.letter(k);
                if (letter == 'I') {
                    continue;
                }
                double rest = 1;
                for (auto i : t.pauli.support()) {
                    if (i != k) {
                        rest *= dist[i][letter_index(t.pauli.letter(i))];
                    }
                }
                c[letter_index(letter)] += t.coeff * t.coeff / rest;
            }
            double norm = std::sqrt(c[0]) + std::sqrt(c[1]) + std::sqrt(c[2]);
            if (norm > 0) {
                LetterDistribution previous = dist[k];
                for (std::size_t a = 0; a < 3; a++) {
                    dist[k][a] = std::sqrt(c[a]) / norm;
                }
                double updated = diag_cost(plan, obs);
                // The block update is an exact minimiser; only rounding can
                // make it look worse.
                if (updated > cost) {
                    dist[k] = previous;
                } else {
                    cost = updated;
                }
            }
            if (cost_trace) {
                cost_trace->push_back(cost);
            }
        }
        if (std::abs(before - cost) <= 1e-10 * std::abs(before)) {
            break;
        }
    }
    return plan;
}

}  // namespace ogm
