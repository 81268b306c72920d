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
#include <span>
#include <string>
#include <vector>

#include "ogm/observable.h"
#include "ogm/plan.h"
#include "ogm/sampler.h"
#include "ogm/simulator.h"

namespace ogm {

/// The scheme's reweighting factor f(P, Q_j, K) for basis `basis`:
///   l1        δ_{P,Q_j} / K(P)
///   grouping  [Q_j in a group measured by P] / K(P)
///   overlap   [Q_j ⊳ P] / χ(Q_j)       (ogm and external lists)
///   shadows   Π_k (δ_{Q_jk,I} + δ_{Q_jk,P_k} / K_k(P_k))
/// Throws NumericalError if the indicator fires on zero probability mass.
double f_value(const MeasurementPlan &plan, const Observable &obs, const PauliString &basis,
               std::size_t term);

struct TermFactor {
    std::size_t term;
    double f;
};

/// Non-zero f_value entries for one basis.
std::vector<TermFactor> basis_factors(const MeasurementPlan &plan, const Observable &obs,
                                      const PauliString &basis);

struct EstimateReport {
    double value = 0.0;
    std::size_t shots_used = 0;
    std::vector<std::size_t> per_term_coverage;
    double bias_bound = 0.0;
    std::vector<std::string> warnings;
};

/// Mean over records of Σ_j coeff_j f(P, Q_j, K) μ(P, supp Q_j), plus the
/// offset. Records must come from the plan's own distribution; a record basis
/// the plan cannot produce raises PreconditionError.
EstimateReport unified_estimate(std::span<const MeasurementRecord> records, const Observable &obs,
                                const MeasurementPlan &plan);

/// Fixed-list estimator: each term averages μ over every shot whose basis
/// covers it, then Σ_j coeff_j · average + offset. Terms with no covering
/// shot contribute 0 and raise a bias warning.
EstimateReport fixed_list_estimate(std::span<const MeasurementRecord> records,
                                   const Observable &obs);

enum class UncoveredPolicy { Error, Exclude };

/// Exact single-shot variance of the unified estimator under `plan` for a
/// pure state. With UncoveredPolicy::Exclude, terms with χ = 0 are dropped
/// from the estimator (and from the mean it is centred on).
double analytic_variance(const MeasurementPlan &plan, const Observable &obs,
                         const StateVector &state,
                         UncoveredPolicy policy = UncoveredPolicy::Error);

/// ||coeff||_1^2.
double l1_variance_bound(const Observable &obs);
/// ||coeff||_1^2 (Σ_k Σ_{j∈e_k} |coeff_j| / ||e_k||_1)^2 over a partition.
double grouping_variance_bound(const Observable &obs, const std::vector<Group> &groups);
/// 3^locality (Σ_j |coeff_j|)^2 for uniform classical shadows.
double shadow_variance_bound(const Observable &obs);
/// Chebyshev sample count ceil(variance / (delta eps^2)).
std::size_t chebyshev_budget(double variance, double eps, double delta);

enum class VarianceMode { Analytic, MonteCarlo };

struct FixedListVarianceOptions {
    VarianceMode mode = VarianceMode::Analytic;
    std::size_t repetitions = 10000;
    std::uint64_t seed = 0;
};

/// Variance of fixed_list_estimate for a given measurement list. Analytic
/// mode sums per-shot covariances Σ_k M_k Σ_{j,j'} coeff_j coeff_j' /(s_j s_j')
/// Cov(μ_j, μ_j' | P_k); Monte Carlo mode reruns the list and returns the
/// unbiased sample variance of the estimates.
double fixed_list_variance(const FixedMeasurementList &list, const Observable &obs,
                           const StateVector &state, const FixedListVarianceOptions &options = {});

/// sqrt(mean((estimate - truth)^2)).
double rmse(std::span<const double> estimates, double truth);

}  // namespace ogm
