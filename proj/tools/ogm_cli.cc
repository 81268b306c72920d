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

// Command-line front end: plan, sample, run, estimate, variance, bench.

#include <CLI11.hpp>
#include <charconv>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "ogm/bench.h"
#include "ogm/error.h"
#include "ogm/estimator.h"
#include "ogm/json_io.h"
#include "ogm/observable.h"
#include "ogm/sampler.h"
#include "ogm/simulator.h"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

void emit(const std::string &out, const nlohmann::json &doc) {
    if (out.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        ogm::write_json_file(out, doc);
    }
}

ogm::StateVector resolve_state(const std::string &which, const ogm::Observable &obs) {
    std::size_t n = obs.num_qubits();
    if (which == "ground") {
        return ogm::ground_state(obs).state;
    }
    if (which == "ghz") {
        return ogm::StateVector::ghz(n);
    }
    if (which == "zero") {
        return ogm::StateVector::zero(n);
    }
    if (which.starts_with("random:")) {
        std::uint64_t seed = 0;
        auto digits = which.substr(7);
        auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
        if (ec != std::errc() || p != digits.data() + digits.size() || digits.empty()) {
            throw ogm::PreconditionError("bad random state seed in '" + which + "'");
        }
        return ogm::StateVector::random_real(n, seed);
    }
    auto state = ogm::load_state(which);
    if (state.num_qubits() != n) {
        throw ogm::DimensionError("state has " + std::to_string(state.num_qubits()) +
                                  " qubits but the observable has " + std::to_string(n));
    }
    return state;
}

template <typename T>
std::vector<T> split_list(const std::string &text) {
    std::vector<T> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        if (item.empty()) {
            continue;
        }
        if constexpr (std::is_same_v<T, std::string>) {
            out.push_back(item);
        } else {
            T v{};
            auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
            if (ec != std::errc() || p != item.data() + item.size()) {
                throw ogm::PreconditionError("bad list entry '" + item + "'");
            }
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Overlapped grouping measurement planner and benchmark"};
    app.require_subcommand(1);

    // plan
    std::string ham, planner, out, plan_path, list_path, records_path, state_spec = "ground";
    std::size_t budget = 1000, restarts = 10, lbcs_sweeps = 200;
    std::uint64_t seed = 0;
    double drop = 0.0;
    bool no_prune = false;
    auto *plan_cmd = app.add_subcommand("plan", "Build a measurement plan");
    plan_cmd->add_option("--scheme", planner, "l1, ldf, cs, lbcs, ogm-v1 or ogm-v2")
        ->required()
        ->check(CLI::IsMember({"l1", "ldf", "cs", "lbcs", "ogm-v1", "ogm-v2"}));
    plan_cmd->add_option("--ham", ham, "Observable file")->required();
    plan_cmd->add_option("--budget", budget, "Intended sample count T");
    plan_cmd->add_option("--seed", seed, "Optimizer seed");
    plan_cmd->add_option("--restarts", restarts, "OGM optimizer restarts");
    plan_cmd->add_option("--lbcs-sweeps", lbcs_sweeps, "LBCS sweep limit");
    plan_cmd->add_option("--drop-threshold", drop, "Drop terms with |coeff| at or below this");
    plan_cmd->add_flag("--no-prune", no_prune, "Skip OGM group pruning");
    plan_cmd->add_option("--out", out, "Output file (stdout if omitted)");

    // sample
    std::string mode = "derand";
    auto *sample_cmd = app.add_subcommand("sample", "Draw a fixed measurement list from a plan");
    sample_cmd->add_option("--plan", plan_path, "Plan JSON")->required();
    sample_cmd->add_option("--budget", budget, "Number of shots T")->required();
    sample_cmd->add_option("--mode", mode, "iid or derand")->check(CLI::IsMember({"iid", "derand"}));
    sample_cmd->add_option("--seed", seed, "Sampler seed");
    sample_cmd->add_option("--out", out, "Output file (stdout if omitted)");

    // run
    auto *run_cmd = app.add_subcommand("run", "Simulate the measurements of a list");
    run_cmd->add_option("--ham", ham, "Observable file")->required();
    run_cmd->add_option("--plan", plan_path, "Plan JSON (checked for consistency)");
    run_cmd->add_option("--list", list_path, "Measurement list JSON")->required();
    run_cmd->add_option("--state", state_spec, "ground, ghz, zero, random:SEED or a state file");
    run_cmd->add_option("--seed", seed, "Measurement seed");
    run_cmd->add_option("--out", out, "Output file (stdout if omitted)");

    // estimate
    std::string estimator = "unified";
    auto *estimate_cmd = app.add_subcommand("estimate", "Estimate the observable from records");
    estimate_cmd->add_option("--records", records_path, "Records JSON")->required();
    estimate_cmd->add_option("--ham", ham, "Observable file")->required();
    estimate_cmd->add_option("--plan", plan_path, "Plan JSON (needed by the unified estimator)");
    estimate_cmd->add_option("--estimator", estimator, "unified or fixed-list")
        ->check(CLI::IsMember({"unified", "fixed-list"}));
    estimate_cmd->add_option("--out", out, "Output file (stdout if omitted)");

    // variance
    double eps = 0.1, delta = 0.05;
    auto *variance_cmd = app.add_subcommand("variance", "Analytic variance and sample bounds");
    variance_cmd->add_option("--ham", ham, "Observable file")->required();
    variance_cmd->add_option("--plan", plan_path, "Plan JSON")->required();
    variance_cmd->add_option("--state", state_spec, "ground, ghz, zero, random:SEED or a state file");
    variance_cmd->add_option("--eps", eps, "Target accuracy")->check(CLI::PositiveNumber);
    variance_cmd->add_option("--delta", delta, "Failure probability")->check(CLI::Range(1e-300, 1.0));
    variance_cmd->add_option("--out", out, "Output file (stdout if omitted)");

    // bench
    std::string schemes = "l1,ldf,lbcs,ogm-v1", budgets = "100,1000,10000", external;
    std::string ogm_sampling = "derand";
    std::size_t reps = 100, threads = 0;
    bool timings = false;
    auto *bench_cmd = app.add_subcommand("bench", "Compare schemes by variance and RMSE");
    bench_cmd->add_option("--ham", ham, "Observable file")->required();
    bench_cmd->add_option("--state", state_spec, "ground, ghz, zero, random:SEED or a state file");
    bench_cmd->add_option("--schemes", schemes, "Comma list of planners and 'external'");
    bench_cmd->add_option("--budgets", budgets, "Comma list of shot budgets");
    bench_cmd->add_option("--reps", reps, "Repetitions per budget");
    bench_cmd->add_option("--seed", seed, "Master seed");
    bench_cmd->add_option("--plan-budget", budget, "Budget used when planning OGM");
    bench_cmd->add_option("--restarts", restarts, "OGM optimizer restarts");
    bench_cmd->add_option("--ogm-sampling", ogm_sampling, "iid or derand")
        ->check(CLI::IsMember({"iid", "derand"}));
    bench_cmd->add_option("--external-list", external, "Measurement list for the external row");
    bench_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
    bench_cmd->add_flag("--timings", timings, "Include wall times in the JSON report");
    bench_cmd->add_option("--out", out, "JSON output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        auto load_ham = [&] { return ogm::load_observable(ham, drop); };

        if (*plan_cmd) {
            auto obs = load_ham();
            ogm::PlannerOptions options;
            options.ogm.budget = budget;
            options.ogm.restarts = restarts;
            options.ogm.seed = seed;
            options.lbcs_sweeps = lbcs_sweeps;
            options.lbcs_seed = seed;
            options.prune = !no_prune;
            if (budget < 1) {
                throw ogm::PreconditionError("budget must be at least 1");
            }
            auto result = ogm::build_plan(planner, obs, options);
            emit(out, ogm::plan_to_json(result.plan, obs, &result.diagnostics));
        } else if (*sample_cmd) {
            auto plan = ogm::plan_from_json(ogm::read_json_file(plan_path));
            auto list = mode == "iid" ? ogm::draw_iid(plan, budget, seed)
                                      : ogm::partial_derandomize(plan, budget, seed);
            emit(out, ogm::list_to_json(list));
        } else if (*run_cmd) {
            auto obs = load_ham();
            auto list = ogm::list_from_json(ogm::read_json_file(list_path));
            if (list.num_qubits != obs.num_qubits()) {
                throw ogm::DimensionError("measurement list has " + std::to_string(list.num_qubits) +
                                          " qubits but the observable has " +
                                          std::to_string(obs.num_qubits()));
            }
            if (!plan_path.empty()) {
                ogm::plan_from_json(ogm::read_json_file(plan_path), &obs);
            }
            auto state = resolve_state(state_spec, obs);
            auto records = ogm::execute(state, list, seed);
            emit(out, ogm::records_to_json(records, obs.num_qubits()));
        } else if (*estimate_cmd) {
            auto obs = load_ham();
            auto records = ogm::records_from_json(ogm::read_json_file(records_path));
            for (const auto &r : records) {
                if (r.basis.num_qubits() != obs.num_qubits()) {
                    throw ogm::DimensionError("records and observable disagree on the qubit count");
                }
            }
            ogm::EstimateReport report;
            if (estimator == "unified") {
                if (plan_path.empty()) {
                    throw ogm::PreconditionError("the unified estimator needs --plan");
                }
                auto plan = ogm::plan_from_json(ogm::read_json_file(plan_path), &obs);
                report = ogm::unified_estimate(records, obs, plan);
            } else {
                report = ogm::fixed_list_estimate(records, obs);
            }
            for (const auto &w : report.warnings) {
                std::cerr << "warning: " << w << "\n";
            }
            emit(out, ogm::estimate_to_json(report, obs, estimator));
        } else if (*variance_cmd) {
            auto obs = load_ham();
            auto plan = ogm::plan_from_json(ogm::read_json_file(plan_path), &obs);
            auto state = resolve_state(state_spec, obs);
            double var = ogm::analytic_variance(plan, obs, state, ogm::UncoveredPolicy::Exclude);
            nlohmann::json doc{{"format_version", ogm::kFormatVersion},
                               {"scheme", std::string(ogm::scheme_name(plan.scheme))},
                               {"truth", ogm::expectation(state, obs)},
                               {"analytic_variance", var},
                               {"l1_bound", ogm::l1_variance_bound(obs)},
                               {"shadow_bound", ogm::shadow_variance_bound(obs)},
                               {"eps", eps},
                               {"delta", delta},
                               {"chebyshev_budget", ogm::chebyshev_budget(var, eps, delta)}};
            emit(out, doc);
        } else if (*bench_cmd) {
            auto obs = load_ham();
            auto state = resolve_state(state_spec, obs);
            ogm::BenchOptions options;
            options.schemes = split_list<std::string>(schemes);
            options.budgets = split_list<std::size_t>(budgets);
            options.reps = reps;
            options.seed = seed;
            options.threads = threads;
            options.planner.ogm.budget = budget;
            options.planner.ogm.restarts = restarts;
            options.planner.ogm.seed = seed;
            options.planner.lbcs_seed = seed;
            options.ogm_sampling = ogm::parse_sampling_mode(ogm_sampling);
            if (!external.empty()) {
                options.external_list = ogm::list_from_json(ogm::read_json_file(external));
            }
            auto report = ogm::run_benchmark(obs, state, options);
            std::cout << ogm::format_bench_table(report);
            if (!out.empty()) {
                ogm::write_json_file(out, ogm::bench_to_json(report, timings));
            }
        }
    } catch (const ogm::NumericalError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
