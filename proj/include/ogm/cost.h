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
#include <limits>

#include "ogm/observable.h"
#include "ogm/plan.h"

namespace ogm {

inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

/// Σ_j coeff_j² / χ(Q_j). Returns kInfiniteCost when some term has χ = 0.
double diag_cost(const MeasurementPlan &plan, const Observable &obs);

/// diag_cost over covered terms plus coeff_j² · budget for every term with
/// χ = 0. `budget` must be at least 1.
double final_cost(const MeasurementPlan &plan, const Observable &obs, std::size_t budget);

}  // namespace ogm
