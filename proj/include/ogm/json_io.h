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

#include <json.hpp>
#include <span>
#include <string>
#include <vector>

#include "ogm/estimator.h"
#include "ogm/observable.h"
#include "ogm/overlapped.h"
#include "ogm/plan.h"
#include "ogm/sampler.h"
#include "ogm/simulator.h"

namespace ogm {

/// Version stamped into every JSON document as `format_version`.
inline constexpr int kFormatVersion = 1;

/// Plan document: {format_version, scheme, n, groups:[{basis, probability,
/// weight, members:[pauli...]}], product_dist?:[[pX,pY,pZ]...],
/// uncovered:[pauli...], diagnostics?}. Members are written as Pauli text so
/// the file does not depend on term order.
nlohmann::json plan_to_json(const MeasurementPlan &plan, const Observable &obs,
                            const PlanDiagnostics *diagnostics = nullptr);

/// Inverse of plan_to_json. With an observable, member and uncovered strings
/// are resolved to term indices (unknown strings raise PreconditionError);
/// without one they are left empty.
MeasurementPlan plan_from_json(const nlohmann::json &doc, const Observable *obs = nullptr);

/// Non-finite costs are written as null.
nlohmann::json diagnostics_to_json(const PlanDiagnostics &d);

nlohmann::json list_to_json(const FixedMeasurementList &list);
FixedMeasurementList list_from_json(const nlohmann::json &doc);

/// Records grouped by consecutive basis: {basis, outcomes:["+-+", ...]} with
/// one character per qubit, qubit 1 leftmost.
nlohmann::json records_to_json(std::span<const MeasurementRecord> records, std::size_t num_qubits);
std::vector<MeasurementRecord> records_from_json(const nlohmann::json &doc);

nlohmann::json estimate_to_json(const EstimateReport &report, const Observable &obs,
                                const std::string &estimator);

nlohmann::json read_json_file(const std::string &path);
/// Writes `doc.dump(2)` plus a newline.
void write_json_file(const std::string &path, const nlohmann::json &doc);

}  // namespace ogm
