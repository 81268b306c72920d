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

#include "ogm/plan.h"

#include <cmath>

#include "ogm/error.h"

namespace ogm {

std::string_view scheme_name(Scheme s) {
    switch (s) {
        case Scheme::L1:
            return "l1";
        case Scheme::LDF:
            return "ldf";
        case Scheme::CSUniform:
            return "cs-uniform";
        case Scheme::LBCS:
            return "lbcs";
        case Scheme::OGM:
            return "ogm";
        case Scheme::External:
            return "external";
    }
    return "unknown";
}

Scheme parse_scheme(std::string_view name) {
    for (Scheme s : {Scheme::L1, Scheme::LDF, Scheme::CSUniform, Scheme::LBCS, Scheme::OGM,
                     Scheme::External}) {
        if (scheme_name(s) == name) {
            return s;
        }
    }
    throw ParseError("unknown scheme '" + std::string(name) + "'", 0);
}

std::size_t letter_index(char letter) {
    switch (letter) {
        case 'X':
            return 0;
        case 'Y':
            return 1;
        case 'Z':
            return 2;
        default:
            throw PreconditionError("identity has no letter index");
    }
}

void MeasurementPlan::validate(const Observable &obs) const {
    if (obs.num_qubits() != num_qubits) {
        throw DimensionError("plan and observable disagree on qubit count");
    }
    constexpr double tol = 1e-12;
    if (product_dist) {
        if (product_dist->size() != num_qubits) {
            throw PreconditionError("product distribution must have one triple per qubit");
        }
        for (const auto &triple : *product_dist) {
            double s = 0;
            for (double p : triple) {
                if (!(p >= 0)) {
                    throw PreconditionError("negative letter probability");
                }
                s += p;
            }
            if (std::abs(s - 1) > tol) {
                throw PreconditionError("per-qubit letter probabilities do not sum to 1");
            }
        }
    } else {
        double s = 0;
        for (const auto &g : groups) {
            if (!(g.probability >= 0)) {
                throw PreconditionError("negative group probability");
            }
            if (g.basis.num_qubits() != num_qubits) {
                throw DimensionError("group basis has the wrong qubit count");
            }
            for (auto j : g.members) {
                if (j >= obs.size() || !covers(obs[j].pauli, g.basis)) {
                    throw PreconditionError("group member is not covered by its basis");
                }
            }
            s += g.probability;
        }
        if (std::abs(s - 1) > tol) {
            throw PreconditionError("group probabilities do not sum to 1");
        }
    }
    std::vector<bool> listed(obs.size(), false);
    for (auto j : uncovered) {
        if (j >= obs.size()) {
            throw PreconditionError("uncovered index out of range");
        }
        listed[j] = true;
    }
    for (std::size_t j = 0; j < obs.size(); j++) {
        if (!listed[j] && coverage_probability(obs[j].pauli, *this) <= 0) {
            throw PreconditionError(
                "term " + obs[j].pauli.str() + " is neither covered nor listed as uncovered");
        }
    }
}

double coverage_probability(const PauliString &q, const MeasurementPlan &plan) {
    if (plan.product_dist) {
        double p = 1;
        for (auto k : q.support()) {
            p *= (*plan.product_dist)[k][letter_index(q.letter(k))];
        }
        return p;
    }
    double total = 0;
    for (const auto &g : plan.groups) {
        if (covers(q, g.basis)) {
            total += g.probability;
        }
    }
    return total;
}

double chi(std::size_t term_index, const MeasurementPlan &plan, const Observable &obs) {
    return coverage_probability(obs[term_index].pauli, plan);
}

void refresh_uncovered(MeasurementPlan &plan, const Observable &obs) {
    plan.uncovered.clear();
    for (std::size_t j = 0; j < obs.size(); j++) {
        if (coverage_probability(obs[j].pauli, plan) <= 0) {
            plan.uncovered.push_back(j);
        }
    }
}

}  // namespace ogm
