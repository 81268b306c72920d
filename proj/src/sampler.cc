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

#include "ogm/sampler.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "ogm/error.h"
#include "ogm/random.h"

namespace ogm {

namespace {

void require_shots(std::size_t shots) {
    if (shots < 1) {
        throw PreconditionError("sample budget must be at least 1");
    }
}

// Merge duplicate bases while keeping first-appearance order.
FixedMeasurementList collect(std::size_t n, const std::vector<PauliString> &bases,
                             const std::vector<std::size_t> &shots) {
    FixedMeasurementList out;
    out.num_qubits = n;
    std::map<PauliString, std::size_t> slot;
    for (std::size_t i = 0; i < bases.size(); i++) {
        if (shots[i] == 0) {
            continue;
        }
        auto [it, inserted] = slot.try_emplace(bases[i], out.entries.size());
        if (inserted) {
            out.entries.push_back({bases[i], shots[i]});
        } else {
            out.entries[it->second].shots += shots[i];
        }
    }
    return out;
}

std::vector<std::size_t> descending_order(const MeasurementPlan &plan) {
    std::vector<std::size_t> order(plan.groups.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return plan.groups[a].probability > plan.groups[b].probability;
    });
    return order;
}

}  // namespace

std::size_t FixedMeasurementList::total_shots() const {
    std::size_t t = 0;
    for (const auto &e : entries) {
        t += e.shots;
    }
    return t;
}

std::vector<std::size_t> FixedMeasurementList::coverage(const Observable &obs) const {
    std::vector<std::size_t> s(obs.size(), 0);
    for (std::size_t j = 0; j < obs.size(); j++) {
        for (const auto &e : entries) {
            if (covers(obs[j].pauli, e.basis)) {
                s[j] += e.shots;
            }
        }
    }
    return s;
}

MeasurementPlan list_plan(const FixedMeasurementList &list, const Observable &obs) {
    if (list.num_qubits != obs.num_qubits()) {
        throw DimensionError("measurement list and observable disagree on the qubit count");
    }
    std::size_t total = list.total_shots();
    if (total == 0) {
        throw PreconditionError("measurement list is empty");
    }
    MeasurementPlan plan;
    plan.scheme = Scheme::External;
    plan.num_qubits = list.num_qubits;
    for (const auto &e : list.entries) {
        if (e.shots == 0) {
            continue;
        }
        Group g;
        g.basis = e.basis;
        g.probability = static_cast<double>(e.shots) / static_cast<double>(total);
        for (std::size_t j = 0; j < obs.size(); j++) {
            if (covers(obs[j].pauli, e.basis)) {
                g.members.push_back(j);
                g.weight += std::abs(obs[j].coeff);
            }
        }
        plan.groups.push_back(std::move(g));
    }
    refresh_uncovered(plan, obs);
    return plan;
}

FixedMeasurementList draw_iid(const MeasurementPlan &plan, std::size_t shots, std::uint64_t seed) {
    require_shots(shots);
    std::mt19937_64 rng(seed);
    if (plan.product_dist) {
        const auto &dist = *plan.product_dist;
        std::map<PauliString, std::size_t> counts;
        static constexpr char letters[3] = {'X', 'Y', 'Z'};
        for (std::size_t t = 0; t < shots; t++) {
            PauliString p(plan.num_qubits);
            for (std::size_t k = 0; k < plan.num_qubits; k++) {
                double u = uniform01(rng);
                std::size_t a = 0;
                while (a < 2 && u >= dist[k][a]) {
                    u -= dist[k][a];
                    a++;
                }
                p.set_letter(k, letters[a]);
            }
            counts[p]++;
        }
        FixedMeasurementList out;
        out.num_qubits = plan.num_qubits;
        for (const auto &[p, c] : counts) {
            out.entries.push_back({p, c});
        }
        return out;
    }
    if (plan.groups.empty()) {
        throw PreconditionError("plan has no groups to sample from");
    }
    std::vector<double> cumulative;
    double acc = 0;
    for (const auto &g : plan.groups) {
        acc += g.probability;
        cumulative.push_back(acc);
    }
    std::vector<std::size_t> counts(plan.groups.size(), 0);
    for (std::size_t t = 0; t < shots; t++) {
        double u = uniform01(rng) * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t idx = std::min<std::size_t>(it - cumulative.begin(), counts.size() - 1);
        // Skip zero-probability groups that upper_bound can land on at ties.
        while (plan.groups[idx].probability <= 0 && idx + 1 < counts.size()) {
            idx++;
        }
        counts[idx]++;
    }
    std::vector<PauliString> bases;
    for (const auto &g : plan.groups) {
        bases.push_back(g.basis);
    }
    return collect(plan.num_qubits, bases, counts);
}

FixedMeasurementList partial_derandomize(const MeasurementPlan &plan, std::size_t shots,
                                         std::uint64_t seed, ResidualRule rule) {
    require_shots(shots);
    if (plan.is_product() || plan.groups.empty()) {
        throw PreconditionError("partial derandomisation needs an explicit-group plan");
    }
    auto order = descending_order(plan);
    std::size_t s = order.size();
    double total_prob = 0;
    for (const auto &g : plan.groups) {
        total_prob += g.probability;
    }
    std::vector<std::size_t> count(s, 0);
    std::vector<double> expected(s), residual(s);
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < s; i++) {
        double e = plan.groups[order[i]].probability / total_prob * static_cast<double>(shots);
        double nearest = std::round(e);
        if (std::abs(e - nearest) <= 1e-9 * std::max(1.0, e)) {
            e = nearest;
        }
        expected[i] = e;
        count[i] = static_cast<std::size_t>(std::floor(e));
        residual[i] = e - std::floor(e);
        assigned += count[i];
    }
    std::mt19937_64 rng(seed);

    if (rule == ResidualRule::Systematic) {
        if (assigned < shots) {
            std::size_t extra = shots - assigned;
            double mass = std::accumulate(residual.begin(), residual.end(), 0.0);
            double scale = mass > 0 ? static_cast<double>(extra) / mass : 0.0;
            double u = uniform01(rng);
            double lo = 0;
            std::size_t placed = 0;
            for (std::size_t i = 0; i < s && placed < extra; i++) {
                double hi = lo + residual[i] * scale;
                // Points u, u+1, ... falling in [lo, hi) select basis i.
                double first = std::ceil(lo - u);
                if (first + u < hi && first < static_cast<double>(extra)) {
                    count[i]++;
                    placed++;
                }
                lo = hi;
            }
            // Rounding can leave the last point unplaced; give it to the
            // basis with the largest residual.
            while (placed < extra) {
                auto best = std::max_element(residual.begin(), residual.end()) - residual.begin();
                count[static_cast<std::size_t>(best)]++;
                residual[static_cast<std::size_t>(best)] = -1;
                placed++;
            }
        }
    } else {
        for (std::size_t i = 0; i < s && assigned < shots; i++) {
            if (uniform01(rng) < residual[i]) {
                count[i]++;
                assigned++;
            }
        }
        for (std::size_t i = 0; i < s && assigned < shots; i++) {
            if (expected[i] < 1) {
                count[i]++;
                assigned++;
            }
        }
        for (std::size_t i = 0; assigned < shots; i = (i + 1) % s) {
            count[i]++;
            assigned++;
        }
        for (std::size_t i = s; assigned > shots && i-- > 0;) {
            std::size_t cut = std::min(count[i], assigned - shots);
            count[i] -= cut;
            assigned -= cut;
        }
    }

    std::vector<PauliString> bases;
    for (auto g : order) {
        bases.push_back(plan.groups[g].basis);
    }
    return collect(plan.num_qubits, bases, count);
}

}  // namespace ogm
