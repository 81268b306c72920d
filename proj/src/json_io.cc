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

#include "ogm/json_io.h"

#include <cmath>
#include <fstream>
#include <unordered_map>

#include "ogm/error.h"

namespace ogm {

using nlohmann::json;

namespace {

void check_version(const json &doc, const char *what) {
    if (!doc.is_object() || !doc.contains("format_version")) {
        throw ParseError(std::string(what) + " document has no format_version", 0);
    }
    int v = doc.at("format_version").get<int>();
    if (v != kFormatVersion) {
        throw ParseError(std::string(what) + " format_version " + std::to_string(v) +
                             " is not supported",
                         0);
    }
}

json finite_or_null(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

std::size_t resolve_term(const std::unordered_map<PauliString, std::size_t> &index,
                         const std::string &text) {
    auto it = index.find(PauliString::parse(text));
    if (it == index.end()) {
        throw PreconditionError("plan refers to term " + text + " absent from the observable");
    }
    return it->second;
}

template <typename F>
auto wrap_json_errors(const char *what, F &&f) {
    try {
        return f();
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed ") + what + " document: " + e.what(), 0);
    }
}

}  // namespace

json plan_to_json(const MeasurementPlan &plan, const Observable &obs,
                  const PlanDiagnostics *diagnostics) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["scheme"] = std::string(scheme_name(plan.scheme));
    doc["n"] = plan.num_qubits;
    json groups = json::array();
    for (const auto &g : plan.groups) {
        json members = json::array();
        for (auto j : g.members) {
            members.push_back(obs[j].pauli.str());
        }
        groups.push_back({{"basis", g.basis.str()},
                          {"probability", g.probability},
                          {"weight", g.weight},
                          {"members", members}});
    }
    doc["groups"] = groups;
    if (plan.product_dist) {
        json dist = json::array();
        for (const auto &t : *plan.product_dist) {
            dist.push_back({t[0], t[1], t[2]});
        }
        doc["product_dist"] = dist;
    }
    json uncovered = json::array();
    for (auto j : plan.uncovered) {
        uncovered.push_back(obs[j].pauli.str());
    }
    doc["uncovered"] = uncovered;
    if (diagnostics) {
        doc["diagnostics"] = diagnostics_to_json(*diagnostics);
    }
    return doc;
}

MeasurementPlan plan_from_json(const json &doc, const Observable *obs) {
    check_version(doc, "plan");
    return wrap_json_errors("plan", [&] {
        MeasurementPlan plan;
        plan.scheme = parse_scheme(doc.at("scheme").get<std::string>());
        plan.num_qubits = doc.at("n").get<std::size_t>();
        if (obs && obs->num_qubits() != plan.num_qubits) {
            throw DimensionError("plan has " + std::to_string(plan.num_qubits) +
                                 " qubits but the observable has " +
                                 std::to_string(obs->num_qubits()));
        }
        std::unordered_map<PauliString, std::size_t> index;
        if (obs) {
            for (std::size_t j = 0; j < obs->size(); j++) {
                index.emplace((*obs)[j].pauli, j);
            }
        }
        for (const auto &g : doc.at("groups")) {
            Group group;
            group.basis = PauliString::parse(g.at("basis").get<std::string>());
            if (group.basis.num_qubits() != plan.num_qubits) {
                throw DimensionError("group basis " + group.basis.str() + " has the wrong length");
            }
            group.probability = g.at("probability").get<double>();
            group.weight = g.value("weight", 0.0);
            if (obs) {
                for (const auto &mtext : g.at("members")) {
                    group.members.push_back(resolve_term(index, mtext.get<std::string>()));
                }
            }
            plan.groups.push_back(std::move(group));
        }
        if (doc.contains("product_dist")) {
            std::vector<LetterDistribution> dist;
            for (const auto &t : doc.at("product_dist")) {
                dist.push_back({t.at(0).get<double>(), t.at(1).get<double>(), t.at(2).get<double>()});
            }
            if (dist.size() != plan.num_qubits) {
                throw DimensionError("product_dist must have one entry per qubit");
            }
            plan.product_dist = std::move(dist);
        }
        if (obs && doc.contains("uncovered")) {
            for (const auto &u : doc.at("uncovered")) {
                plan.uncovered.push_back(resolve_term(index, u.get<std::string>()));
            }
        }
        return plan;
    });
}

json diagnostics_to_json(const PlanDiagnostics &d) {
    return {{"diag_cost", finite_or_null(d.diag_cost)},
            {"final_cost", finite_or_null(d.final_cost)},
            {"uncovered_bias_bound", d.uncovered_bias_bound},
            {"group_count", d.group_count},
            {"optimizer_iterations", d.optimizer_iterations}};
}

json list_to_json(const FixedMeasurementList &list) {
    json entries = json::array();
    for (const auto &e : list.entries) {
        entries.push_back({{"basis", e.basis.str()}, {"shots", e.shots}});
    }
    return {{"format_version", kFormatVersion},
            {"n", list.num_qubits},
            {"total_shots", list.total_shots()},
            {"entries", entries}};
}

FixedMeasurementList list_from_json(const json &doc) {
    check_version(doc, "measurement list");
    return wrap_json_errors("measurement list", [&] {
        FixedMeasurementList list;
        list.num_qubits = doc.at("n").get<std::size_t>();
        for (const auto &e : doc.at("entries")) {
            ListEntry entry{PauliString::parse(e.at("basis").get<std::string>()),
                            e.at("shots").get<std::size_t>()};
            if (entry.basis.num_qubits() != list.num_qubits) {
                throw DimensionError("list entry " + entry.basis.str() + " has the wrong length");
            }
            list.entries.push_back(std::move(entry));
        }
        return list;
    });
}

json records_to_json(std::span<const MeasurementRecord> records, std::size_t num_qubits) {
    json blocks = json::array();
    for (std::size_t i = 0; i < records.size();) {
        const auto &basis = records[i].basis;
        json outcomes = json::array();
        for (; i < records.size() && records[i].basis == basis; i++) {
            std::string s(num_qubits, '+');
            for (std::size_t k = 0; k < num_qubits; k++) {
                if (records[i].outcome(k) < 0) {
                    s[k] = '-';
                }
            }
            outcomes.push_back(s);
        }
        blocks.push_back({{"basis", basis.str()}, {"outcomes", outcomes}});
    }
    return {{"format_version", kFormatVersion},
            {"n", num_qubits},
            {"shots", records.size()},
            {"records", blocks}};
}

std::vector<MeasurementRecord> records_from_json(const json &doc) {
    check_version(doc, "records");
    return wrap_json_errors("records", [&] {
        std::size_t n = doc.at("n").get<std::size_t>();
        std::vector<MeasurementRecord> out;
        for (const auto &block : doc.at("records")) {
            PauliString basis = PauliString::parse(block.at("basis").get<std::string>());
            if (basis.num_qubits() != n) {
                throw DimensionError("record basis " + basis.str() + " has the wrong length");
            }
            for (const auto &o : block.at("outcomes")) {
                auto s = o.get<std::string>();
                if (s.size() != n) {
                    throw DimensionError("outcome string '" + s + "' has the wrong length");
                }
                MeasurementRecord rec{basis, 0};
                for (std::size_t k = 0; k < n; k++) {
                    if (s[k] == '-') {
                        rec.minus_mask |= std::uint64_t{1} << k;
                    } else if (s[k] != '+') {
                        throw ParseError("outcome characters must be '+' or '-'", k + 1);
                    }
                }
                out.push_back(rec);
            }
        }
        return out;
    });
}

json estimate_to_json(const EstimateReport &report, const Observable &obs,
                      const std::string &estimator) {
    json coverage = json::array();
    for (std::size_t j = 0; j < obs.size(); j++) {
        coverage.push_back({{"term", obs[j].pauli.str()}, {"shots", report.per_term_coverage[j]}});
    }
    return {{"format_version", kFormatVersion},
            {"estimator", estimator},
            {"value", report.value},
            {"shots_used", report.shots_used},
            {"bias_bound", report.bias_bound},
            {"per_term_coverage", coverage},
            {"warnings", report.warnings}};
}

json read_json_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw PreconditionError("file not found: " + path);
    }
    try {
        return json::parse(f);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(path + ": " + e.what(), e.byte);
    }
}

void write_json_file(const std::string &path, const json &doc) {
    std::ofstream f(path);
    if (!f) {
        throw PreconditionError("cannot write " + path);
    }
    f << doc.dump(2) << "\n";
}

}  // namespace ogm
