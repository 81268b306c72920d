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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ogm/observable.h"
#include "ogm/pauli.h"

namespace ogm {

enum class Scheme { L1, LDF, CSUniform, LBCS, OGM, External };

std::string_view scheme_name(Scheme s);
Scheme parse_scheme(std::string_view name);

/// A measurement basis together with the terms it is meant to measure.
struct Group {
    std::vector<std::size_t> members;  // term indices into the observable
    PauliString basis;
    double weight = 0.0;  // summed |coeff| of members when the group was formed
    double probability = 0.0;

    bool operator==(const Group &) const = default;
};

/// Per-qubit basis probabilities, indexed X=0, Y=1, Z=2.
using LetterDistribution = std::array<double, 3>;

std::size_t letter_index(char letter);

/// A distribution over measurement bases, either an explicit list of groups
/// or (classical-shadow schemes) a product of per-qubit letter distributions.
struct MeasurementPlan {
    Scheme scheme = Scheme::L1;
    std::size_t num_qubits = 0;
    std::vector<Group> groups;
    std::optional<std::vector<LetterDistribution>> product_dist;
    /// Terms with no covering basis left in the plan (e.g. after pruning).
    std::vector<std::size_t> uncovered;

    bool is_product() const {
        return product_dist.has_value();
    }

    /// Checks the probability normalisation and that every term is either
    /// covered by some basis or listed in `uncovered`. Throws PreconditionError.
    void validate(const Observable &obs) const;

    bool operator==(const MeasurementPlan &) const = default;
};

/// Probability mass of bases covering `q` (Σ over explicit groups, or the
/// product of per-qubit letter probabilities over the support).
double coverage_probability(const PauliString &q, const MeasurementPlan &plan);

/// Shortcut: coverage_probability of term `term_index`.
double chi(std::size_t term_index, const MeasurementPlan &plan, const Observable &obs);

/// Recomputes `uncovered` from the current groups (terms with no covering
/// basis of positive probability).
void refresh_uncovered(MeasurementPlan &plan, const Observable &obs);

}  // namespace ogm
