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

#include "ogm/cost.h"

#include "ogm/error.h"

namespace ogm {

double diag_cost(const MeasurementPlan &plan, const Observable &obs) {
    double total = 0;
    for (const auto &t : obs.terms()) {
        double c = coverage_probability(t.pauli, plan);
        if (c <= 0) {
            return kInfiniteCost;
        }
        total += t.coeff * t.coeff / c;
    }
    return total;
}

double final_cost(const MeasurementPlan &plan, const Observable &obs, std::size_t budget) {
    if (budget < 1) {
        throw PreconditionError("final_cost requires a sample budget of at least 1");
    }
    double total = 0;
    for (const auto &t : obs.terms()) {
        double c = coverage_probability(t.pauli, plan);
        double w2 = t.coeff * t.coeff;
        total += c > 0 ? w2 / c : w2 * static_cast<double>(budget);
    }
    return total;
}

}  // namespace ogm
