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

#include "ogm/bench.h"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

#include "ogm/baseline.h"
#include "ogm/cost.h"
#include "ogm/error.h"
#include "ogm/estimator.h"
#include "ogm/json_io.h"
#include "ogm/random.h"

namespace ogm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct RepTimes {
    double sample = 0, run = 0, estimate = 0;
};

}  // namespace

OptimizedPlan build_plan(const std::string &planner, const Observable &obs,
                         const PlannerOptions &options) {
    std::size_t budget = options.ogm.budget;
    auto wrap = [&](MeasurementPlan plan) {
        auto d = make_diagnostics(plan, obs, budget);
        return OptimizedPlan{std::move(plan), d};
    };
    if (planner == "l1") {
        return wrap(l1_plan(obs));
    }
    if (planner == "ldf") {
        return wrap(grouping_plan(ldf_grouping(obs), obs));
    }
    if (planner == "cs") {
        return wrap(cs_uniform_plan(obs.num_qubits()));
    }
    if (planner == "lbcs") {
        return wrap(lbcs_optimize(obs, options.lbcs_sweeps, options.lbcs_seed));
    }
    if (planner == "ogm-v1" || planner == "ogm-v2") {
        auto version = planner == "ogm-v1" ? OverlapVersion::V1 : OverlapVersion::V2;
        if (options.prune) {
            return plan_ogm(obs, version, options.ogm);
        }
        auto sets = version == OverlapVersion::V1 ? overlapped_sets_v1(obs) : overlapped_sets_v2(obs);
        return optimize_distribution(std::move(sets.groups), obs, options.ogm);
    }
    throw PreconditionError("unknown planner '" + planner +
                            "' (expected l1, ldf, cs, lbcs, ogm-v1 or ogm-v2)");
}

SamplingMode parse_sampling_mode(const std::string &name) {
    if (name == "iid") {
        return SamplingMode::Iid;
    }
    if (name == "derand") {
        return SamplingMode::Derand;
    }
    throw PreconditionError("unknown sampling mode '" + name + "' (expected iid or derand)");
}

BenchReport run_benchmark(const Observable &obs, const StateVector &state,
                          const BenchOptions &options) {
    if (options.reps < 1) {
        throw PreconditionError("bench needs at least one repetition");
    }
    if (options.budgets.empty()) {
        throw PreconditionError("bench needs at least one budget");
    }
    if (state.num_qubits() != obs.num_qubits()) {
        throw DimensionError("state and observable disagree on the qubit count");
    }
    BenchReport report;
    report.truth = expectation(state, obs);
    report.reps = options.reps;
    report.seed = options.seed;
    report.budgets = options.budgets;

    std::size_t threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = std::max<std::size_t>(1, std::min(threads, options.reps));

    for (std::size_t si = 0; si < options.schemes.size(); si++) {
        const auto &name = options.schemes[si];
        BenchRow row;
        row.scheme = name;
        auto t0 = Clock::now();
        MeasurementPlan plan;
        if (name == "external") {
            if (!options.external_list) {
                throw PreconditionError("scheme 'external' needs a measurement list");
            }
            plan = list_plan(*options.external_list, obs);
            row.diag_cost = diag_cost(plan, obs);
        } else {
            auto built = build_plan(name, obs, options.planner);
            plan = std::move(built.plan);
            row.diag_cost = built.diagnostics.diag_cost;
        }
        row.times.plan = seconds_since(t0);
        row.group_count = plan.is_product() ? 0 : plan.groups.size();
        for (auto j : plan.uncovered) {
            row.bias_bound += std::abs(obs[j].coeff);
        }
        row.analytic_variance = analytic_variance(plan, obs, state, UncoveredPolicy::Exclude);

        bool fixed_list = (plan.scheme == Scheme::OGM || plan.scheme == Scheme::External) &&
                          options.ogm_sampling == SamplingMode::Derand;

        for (std::size_t bi = 0; bi < options.budgets.size(); bi++) {
            std::size_t budget = options.budgets[bi];
            std::vector<double> estimates(options.reps);
            std::vector<RepTimes> times(options.reps);
            std::atomic<std::size_t> next{0};
            std::mutex error_mutex;
            std::exception_ptr error;
            auto worker = [&] {
                for (std::size_t r; (r = next.fetch_add(1)) < options.reps;) {
                    try {
                        std::uint64_t base = derive_seed(
                            derive_seed(derive_seed(options.seed, si), bi), r);
                        auto ts = Clock::now();
                        auto list = fixed_list ? partial_derandomize(plan, budget, derive_seed(base, 0))
                                               : draw_iid(plan, budget, derive_seed(base, 0));
                        times[r].sample = seconds_since(ts);
                        ts = Clock::now();
                        auto records = execute(state, list, derive_seed(base, 1));
                        times[r].run = seconds_since(ts);
                        ts = Clock::now();
                        estimates[r] = fixed_list ? fixed_list_estimate(records, obs).value
                                                  : unified_estimate(records, obs, plan).value;
                        times[r].estimate = seconds_since(ts);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) {
                            error = std::current_exception();
                        }
                    }
                }
            };
            {
                std::vector<std::jthread> pool;
                for (std::size_t i = 1; i < threads; i++) {
                    pool.emplace_back(worker);
                }
                worker();
            }
            if (error) {
                std::rethrow_exception(error);
            }
            row.rmse.push_back(rmse(estimates, report.truth));
            for (const auto &t : times) {
                row.times.sample += t.sample;
                row.times.run += t.run;
                row.times.estimate += t.estimate;
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

nlohmann::json bench_to_json(const BenchReport &report, bool include_times) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : report.rows) {
        nlohmann::json rmse = nlohmann::json::array();
        for (std::size_t b = 0; b < report.budgets.size(); b++) {
            rmse.push_back({{"budget", report.budgets[b]}, {"rmse", row.rmse[b]}});
        }
        nlohmann::json r{{"scheme", row.scheme},
                         {"diag_cost", std::isfinite(row.diag_cost) ? nlohmann::json(row.diag_cost)
                                                                    : nlohmann::json(nullptr)},
                         {"analytic_variance", row.analytic_variance},
                         {"rmse", rmse},
                         {"bias_bound", row.bias_bound},
                         {"group_count", row.group_count}};
        if (include_times) {
            r["wall_time"] = {{"plan", row.times.plan},
                              {"sample", row.times.sample},
                              {"run", row.times.run},
                              {"estimate", row.times.estimate}};
        }
        rows.push_back(std::move(r));
    }
    return {{"format_version", kFormatVersion},
            {"truth", report.truth},
            {"reps", report.reps},
            {"seed", report.seed},
            {"budgets", report.budgets},
            {"rows", rows}};
}

std::string format_bench_table(const BenchReport &report) {
    std::ostringstream out;
    char buf[64];
    out << "truth " << report.truth << ", " << report.reps << " reps, seed " << report.seed << "\n";
    std::snprintf(buf, sizeof buf, "%-10s %10s %10s %8s %7s", "scheme", "diag_cost", "variance",
                  "bias", "groups");
    out << buf;
    for (auto t : report.budgets) {
        std::snprintf(buf, sizeof buf, " %12s", ("T=" + std::to_string(t)).c_str());
        out << buf;
    }
    out << "   plan/sample/run/estimate s\n";
    for (const auto &row : report.rows) {
        std::snprintf(buf, sizeof buf, "%-10s %10.4f %10.4f %8.4f %7zu", row.scheme.c_str(),
                      row.diag_cost, row.analytic_variance, row.bias_bound, row.group_count);
        out << buf;
        for (double e : row.rmse) {
            std::snprintf(buf, sizeof buf, " %12.6f", e);
            out << buf;
        }
        std::snprintf(buf, sizeof buf, "   %.3f/%.3f/%.3f/%.3f", row.times.plan, row.times.sample,
                      row.times.run, row.times.estimate);
        out << buf << "\n";
    }
    return out.str();
}

}  // namespace ogm
