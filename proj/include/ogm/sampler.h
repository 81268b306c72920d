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
#include "ogm/pauli.h"
#include "ogm/plan.h"

namespace ogm {

struct ListEntry {
    PauliString basis;
    std::size_t shots = 0;

    bool operator==(const ListEntry &) const = default;
};

/// A concrete multiset of measurement bases with shot counts.
struct FixedMeasurementList {
    std::size_t num_qubits = 0;
    std::vector<ListEntry> entries;

    std::size_t total_shots() const;
    /// s_j: number of shots whose basis covers term j.
    std::vector<std::size_t> coverage(const Observable &obs) const;

    bool operator==(const FixedMeasurementList &) const = default;
};

/// T independent draws from the plan's basis distribution, aggregated per
/// basis. Explicit plans keep group order (duplicate bases merged); product
/// plans list bases lexicographically.
/// Plan whose groups are the list's bases with K = shots / T, members the
/// terms each basis covers. Scheme is External.
MeasurementPlan list_plan(const FixedMeasurementList &list, const Observable &obs);

FixedMeasurementList draw_iid(const MeasurementPlan &plan, std::size_t shots, std::uint64_t seed);

enum class ResidualRule {
    /// One uniform draw places exactly T - Σ floor(K_j T) extra shots so that
    /// basis j receives one with probability K_j T - floor(K_j T).
    Systematic,
    /// Independent Bernoulli residuals in descending-K order while the list is
    /// short, then a top-up over bases with K_j T < 1, then trimming from the
    /// smallest-K bases if needed.
    Independent,
};

/// Partially derandomised allocation: floor(K_j T) deterministic shots per
/// basis plus randomised residual shots, always totalling exactly T.
FixedMeasurementList partial_derandomize(const MeasurementPlan &plan, std::size_t shots,
                                         std::uint64_t seed,
                                         ResidualRule rule = ResidualRule::Systematic);

}  // namespace ogm
