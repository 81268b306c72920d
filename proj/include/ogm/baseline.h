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

/// Importance sampling: one group per term, probability |coeff| / ||coeff||_1.
MeasurementPlan l1_plan(const Observable &obs);

/// Largest-degree-first greedy colouring of the incompatibility graph.
///
/// Vertices are visited in descending degree (ties: canonical term order)
/// and placed in the first existing group with no incompatible member. The
/// result partitions the terms; each basis is the join of its members.
std::vector<Group> ldf_grouping(const Observable &obs);

/// Non-overlapped grouping plan with probability proportional to each
/// group's l1 weight. Throws PreconditionError unless `groups` partition the
/// terms.
MeasurementPlan grouping_plan(std::vector<Group> groups, const Observable &obs);

/// Uniform classical shadows: every qubit measured in X, Y, Z with 1/3 each.
MeasurementPlan cs_uniform_plan(std::size_t num_qubits);

/// Locally biased classical shadows.
///
/// Minimises Σ_j coeff_j² / Π_{k∈supp(Q_j)} p_k(Q_j,k) over per-qubit
/// letter distributions by block coordinate descent, starting from the
/// uniform triple. Each block update is the exact minimiser for one qubit
/// (p_k(P) ∝ sqrt(c_k(P)) where c_k(P) collects the cost attached to letter P
/// on qubit k). Qubits outside every support stay uniform. Stops after
/// `max_sweeps` sweeps or when the relative cost change drops below 1e-10.
/// The seed only permutes the qubit sweep order. If `cost_trace` is given it
/// receives the cost after every block update, starting with the uniform cost.
MeasurementPlan lbcs_optimize(const Observable &obs, std::size_t max_sweeps, std::uint64_t seed,
                              std::vector<double> *cost_trace = nullptr);

}  // namespace ogm
