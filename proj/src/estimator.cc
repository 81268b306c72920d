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

#include "ogm/estimator.h"

#include <cmath>
#include <map>
#include <unordered_map>

#include "ogm/error.h"
#include "ogm/random.h"

namespace ogm {

namespace {

bool is_grouping(Scheme s) {
    return s == Scheme::LDF;
}

bool uses_coverage(Scheme s) {
    return s == Scheme::OGM || s == Scheme::External;
}

void check_plan_shape(const MeasurementPlan &plan, const Observable &obs) {
    if (plan.num_qubits != obs.num_qubits()) {
        throw DimensionError("plan and observable disagree on qubit count");
    }
    bool shadows = plan.scheme == Scheme::CSUniform || plan.scheme == Scheme::LBCS;
    if (shadows != plan.is_product()) {
        throw PreconditionError("scheme '" + std::string(scheme_name(plan.scheme)) +
                                "' does not match the plan's representation");
    }
}

// Probability of drawing exactly `basis` (explicit plans).
double basis_mass(const MeasurementPlan &plan, const PauliString &basis) {
    double k = 0;
    for (const auto &g : plan.groups) {
        if (g.basis == basis) {
            k += g.probability;
        }
    }
    return k;
}

double zero_mass(const std::string &what) {
    throw NumericalError("estimator indicator fired on zero probability mass (" + what + ")");
}

}  // namespace

double f_value(const MeasurementPlan &plan, const Observable &obs, const PauliString &basis,
               std::size_t term) {
    check_plan_shape(plan, obs);
    const PauliString &q = obs[term].pauli;
    if (basis.num_qubits() != q.num_qubits()) {
        throw DimensionError("basis and term disagree on qubit count");
    }
    if (plan.is_product()) {
        const auto &dist = *plan.product_dist;
        double f = 1;
        for (auto k : q.support()) {
            if (basis.letter(k) != q.letter(k)) {
                return 0.0;
            }
            double p = dist[k][letter_index(q.letter(k))];
            if (p <= 0) {
                return zero_mass("letter " + std::string(1, q.letter(k)));
            }
            f /= p;
        }
        return f;
    }
    if (uses_coverage(plan.scheme)) {
        if (!covers(q, basis)) {
            return 0.0;
        }
        double c = coverage_probability(q, plan);
        return c > 0 ? 1.0 / c : zero_mass("chi of " + q.str());
    }
    if (is_grouping(plan.scheme)) {
        double k = 0;
        bool member = false;
        for (const auto &g : plan.groups) {
            if (g.basis == basis) {
                k += g.probability;
                for (auto j : g.members) {
                    member |= j == term;
                }
            }
        }
        if (!member) {
            return 0.0;
        }
        return k > 0 ? 1.0 / k : zero_mass("group basis " + basis.str());
    }
    // l1
    if (!(basis == q)) {
        return 0.0;
    }
    double k = basis_mass(plan, basis);
    return k > 0 ? 1.0 / k : zero_mass("basis " + basis.str());
}

std::vector<TermFactor> basis_factors(const MeasurementPlan &plan, const Observable &obs,
                                      const PauliString &basis) {
    std::vector<TermFactor> out;
    for (std::size_t j = 0; j < obs.size(); j++) {
        double f = f_value(plan, obs, basis, j);
        if (f != 0.0) {
            out.push_back({j, f});
        }
    }
    return out;
}

EstimateReport unified_estimate(std::span<const MeasurementRecord> records, const Observable &obs,
                                const MeasurementPlan &plan) {
    check_plan_shape(plan, obs);
    if (records.empty()) {
        throw PreconditionError("no measurement records to estimate from");
    }
    EstimateReport report;
    report.shots_used = records.size();
    report.per_term_coverage.assign(obs.size(), 0);

    std::unordered_map<PauliString, std::vector<TermFactor>> cache;
    std::unordered_map<PauliString, std::vector<std::size_t>> covered_terms;
    double sum = 0;
    for (const auto &rec : records) {
        if (rec.basis.num_qubits() != obs.num_qubits()) {
            throw DimensionError("record basis has the wrong qubit count");
        }
        auto it = cache.find(rec.basis);
        if (it == cache.end()) {
            bool possible = true;
            if (plan.is_product()) {
                for (std::size_t k = 0; k < plan.num_qubits; k++) {
                    char letter = rec.basis.letter(k);
                    if (letter == 'I' || (*plan.product_dist)[k][letter_index(letter)] <= 0) {
                        possible = false;
                    }
                }
            } else {
                possible = basis_mass(plan, rec.basis) > 0;
            }
            if (!possible) {
                throw PreconditionError("record basis " + rec.basis.str() +
                                        " cannot be drawn from this plan");
            }
            it = cache.emplace(rec.basis, basis_factors(plan, obs, rec.basis)).first;
            auto &cov = covered_terms[rec.basis];
            for (std::size_t j = 0; j < obs.size(); j++) {
                if (covers(obs[j].pauli, rec.basis)) {
                    cov.push_back(j);
                }
            }
        }
        for (auto j : covered_terms[rec.basis]) {
            report.per_term_coverage[j]++;
        }
        for (const auto &tf : it->second) {
            const auto &t = obs[tf.term];
            sum += t.coeff * tf.f * rec.parity(t.pauli.support_mask());
        }
    }
    report.value = obs.offset() + sum / static_cast<double>(records.size());
    for (std::size_t j = 0; j < obs.size(); j++) {
        if (coverage_probability(obs[j].pauli, plan) <= 0) {
            report.bias_bound += std::abs(obs[j].coeff);
        }
    }
    if (report.bias_bound > 0) {
        report.warnings.push_back("plan leaves terms uncovered; estimate is biased by at most " +
                                  std::to_string(report.bias_bound));
    }
    return report;
}

EstimateReport fixed_list_estimate(std::span<const MeasurementRecord> records,
                                   const Observable &obs) {
    if (records.empty()) {
        throw PreconditionError("no measurement records to estimate from");
    }
    EstimateReport report;
    report.shots_used = records.size();
    std::size_t m = obs.size();
    report.per_term_coverage.assign(m, 0);
    std::vector<double> sums(m, 0.0);
    std::unordered_map<PauliString, std::vector<std::size_t>> covered_terms;
    for (const auto &rec : records) {
        if (rec.basis.num_qubits() != obs.num_qubits()) {
            throw DimensionError("record basis has the wrong qubit count");
        }
        auto it = covered_terms.find(rec.basis);
        if (it == covered_terms.end()) {
            std::vector<std::size_t> cov;
            for (std::size_t j = 0; j < m; j++) {
                if (covers(obs[j].pauli, rec.basis)) {
                    cov.push_back(j);
                }
            }
            it = covered_terms.emplace(rec.basis, std::move(cov)).first;
        }
        for (auto j : it->second) {
            report.per_term_coverage[j]++;
            sums[j] += rec.parity(obs[j].pauli.support_mask());
        }
    }
    double value = obs.offset();
    std::size_t missing = 0;
    for (std::size_t j = 0; j < m; j++) {
        if (report.per_term_coverage[j] == 0) {
            report.bias_bound += std::abs(obs[j].coeff);
            missing++;
            continue;
        }
        value += obs[j].coeff * sums[j] / static_cast<double>(report.per_term_coverage[j]);
    }
    report.value = value;
    if (missing > 0) {
        report.warnings.push_back(std::to_string(missing) +
                                  " term(s) never measured; estimate is biased by at most " +
                                  std::to_string(report.bias_bound));
    }
    return report;
}

double analytic_variance(const MeasurementPlan &plan, const Observable &obs,
                         const StateVector &state, UncoveredPolicy policy) {
    check_plan_shape(plan, obs);
    if (state.num_qubits() != obs.num_qubits()) {
        throw DimensionError("state and observable disagree on qubit count");
    }
    std::size_t m = obs.size();
    std::vector<bool> active(m, true);
    for (std::size_t j = 0; j < m; j++) {
        if (coverage_probability(obs[j].pauli, plan) <= 0) {
            if (policy == UncoveredPolicy::Error) {
                throw PreconditionError("term " + obs[j].pauli.str() +
                                        " is not covered by the plan");
            }
            active[j] = false;
        }
    }

    // second[j][k] = E_P[f_j f_k]
    std::vector<std::vector<double>> second(m, std::vector<double>(m, 0.0));
    if (plan.is_product()) {
        const auto &dist = *plan.product_dist;
        for (std::size_t a = 0; a < m; a++) {
            for (std::size_t b = a; b < m; b++) {
                if (!active[a] || !active[b]) {
                    continue;
                }
                const auto &qa = obs[a].pauli;
                const auto &qb = obs[b].pauli;
                double g = 1;
                for (std::size_t k = 0; k < plan.num_qubits && g != 0; k++) {
                    char la = qa.letter(k);
                    char lb = qb.letter(k);
                    if (la != 'I' && lb != 'I') {
                        g = la == lb ? g / dist[k][letter_index(la)] : 0.0;
                    }
                }
                second[a][b] = second[b][a] = g;
            }
        }
    } else {
        std::map<PauliString, double> masses;
        for (const auto &g : plan.groups) {
            if (g.probability > 0) {
                masses[g.basis] += g.probability;
            }
        }
        for (const auto &[basis, mass] : masses) {
            auto factors = basis_factors(plan, obs, basis);
            for (const auto &x : factors) {
                for (const auto &y : factors) {
                    if (active[x.term] && active[y.term]) {
                        second[x.term][y.term] += mass * x.f * y.f;
                    }
                }
            }
        }
    }

    std::unordered_map<PauliString, double> products;
    auto product_expectation = [&](const PauliString &p) {
        auto it = products.find(p);
        if (it != products.end()) {
            return it->second;
        }
        double v = p.is_identity() ? 1.0 : pauli_expectation(state, p);
        products.emplace(p, v);
        return v;
    };

    double second_moment = 0;
    double mean = 0;
    for (std::size_t a = 0; a < m; a++) {
        if (!active[a]) {
            continue;
        }
        mean += obs[a].coeff * product_expectation(obs[a].pauli);
        for (std::size_t b = 0; b < m; b++) {
            if (second[a][b] == 0.0) {
                continue;
            }
            // A common covering basis forces agreement on the shared support,
            // so the product has phase +1 (compatible_product asserts this).
            PauliString prod = compatible_product(obs[a].pauli, obs[b].pauli);
            second_moment += obs[a].coeff * obs[b].coeff * second[a][b] * product_expectation(prod);
        }
    }
    return second_moment - mean * mean;
}

double l1_variance_bound(const Observable &obs) {
    double n = obs.l1_norm();
    return n * n;
}

double grouping_variance_bound(const Observable &obs, const std::vector<Group> &groups) {
    // Σ_k Σ_{j∈e_k} |coeff_j| / ||e_k||_1: with absolute weights every
    // non-empty group contributes exactly 1.
    double groups_used = 0;
    for (const auto &g : groups) {
        if (!g.members.empty()) {
            groups_used += 1;
        }
    }
    double n = obs.l1_norm();
    return n * n * groups_used * groups_used;
}

double shadow_variance_bound(const Observable &obs) {
    double n = obs.l1_norm();
    return std::pow(3.0, static_cast<double>(obs.locality())) * n * n;
}

std::size_t chebyshev_budget(double variance, double eps, double delta) {
    if (!(eps > 0) || !(delta > 0) || delta > 1) {
        throw PreconditionError("Chebyshev budget needs eps > 0 and delta in (0, 1]");
    }
    return static_cast<std::size_t>(std::ceil(variance / (delta * eps * eps)));
}

double fixed_list_variance(const FixedMeasurementList &list, const Observable &obs,
                           const StateVector &state, const FixedListVarianceOptions &options) {
    if (list.num_qubits != obs.num_qubits() || state.num_qubits() != obs.num_qubits()) {
        throw DimensionError("list, observable and state disagree on qubit count");
    }
    if (options.mode == VarianceMode::MonteCarlo) {
        if (options.repetitions < 2) {
            throw PreconditionError("Monte Carlo variance needs at least two repetitions");
        }
        double mean = 0;
        double m2 = 0;
        for (std::size_t r = 0; r < options.repetitions; r++) {
            auto records = execute(state, list, derive_seed(options.seed, r));
            double v = fixed_list_estimate(records, obs).value;
            double delta = v - mean;
            mean += delta / static_cast<double>(r + 1);
            m2 += delta * (v - mean);
        }
        return m2 / static_cast<double>(options.repetitions - 1);
    }

    auto s = list.coverage(obs);
    std::size_t m = obs.size();
    std::vector<double> single(m, 0.0);
    for (std::size_t j = 0; j < m; j++) {
        single[j] = pauli_expectation(state, obs[j].pauli);
    }
    double total = 0;
    for (const auto &e : list.entries) {
        std::vector<std::size_t> cov;
        for (std::size_t j = 0; j < m; j++) {
            if (s[j] > 0 && covers(obs[j].pauli, e.basis)) {
                cov.push_back(j);
            }
        }
        double block = 0;
        for (auto a : cov) {
            for (auto b : cov) {
                PauliString prod = compatible_product(obs[a].pauli, obs[b].pauli);
                double joint = prod.is_identity() ? 1.0 : pauli_expectation(state, prod);
                block += obs[a].coeff * obs[b].coeff / (static_cast<double>(s[a]) * s[b]) *
                         (joint - single[a] * single[b]);
            }
        }
        total += static_cast<double>(e.shots) * block;
    }
    return total;
}

double rmse(std::span<const double> estimates, double truth) {
    if (estimates.empty()) {
        throw PreconditionError("rmse needs at least one estimate");
    }
    double s = 0;
    for (double v : estimates) {
        s += (v - truth) * (v - truth);
    }
    return std::sqrt(s / static_cast<double>(estimates.size()));
}

}  // namespace ogm
