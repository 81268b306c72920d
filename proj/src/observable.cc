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

#include "ogm/observable.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "ogm/error.h"

namespace ogm {

namespace {

std::string_view trim(std::string_view s) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

std::string shortest_repr(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

}  // namespace

bool canonical_before(const WeightedTerm &a, const WeightedTerm &b) {
    double wa = std::abs(a.coeff);
    double wb = std::abs(b.coeff);
    if (wa != wb) {
        return wa > wb;
    }
    return a.pauli < b.pauli;
}

Observable::Observable(std::size_t num_qubits, std::vector<WeightedTerm> terms, double offset,
                       double drop_threshold)
    : n_(num_qubits), offset_(offset) {
    // std::map keyed on the string keeps the merge independent of input order.
    std::map<PauliString, double> merged;
    for (const auto &t : terms) {
        if (t.pauli.num_qubits() != num_qubits) {
            throw DimensionError(
                "term " + t.pauli.str() + " has " + std::to_string(t.pauli.num_qubits()) +
                " qubits, expected " + std::to_string(num_qubits));
        }
        if (!std::isfinite(t.coeff)) {
            throw PreconditionError("non-finite coefficient on term " + t.pauli.str());
        }
        if (t.pauli.is_identity()) {
            offset_ += t.coeff;
        } else {
            merged[t.pauli] += t.coeff;
        }
    }
    for (const auto &[p, c] : merged) {
        if (c != 0.0 && std::abs(c) > drop_threshold) {
            terms_.push_back({c, p});
        }
    }
    std::sort(terms_.begin(), terms_.end(), canonical_before);
}

double Observable::l1_norm() const {
    double total = 0;
    for (const auto &t : terms_) {
        total += std::abs(t.coeff);
    }
    return total;
}

std::size_t Observable::locality() const {
    std::size_t out = 0;
    for (const auto &t : terms_) {
        out = std::max(out, t.pauli.weight());
    }
    return out;
}

Observable parse_observable(std::string_view text, double drop_threshold) {
    std::vector<WeightedTerm> terms;
    double offset = 0;
    std::size_t n = 0;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        line_no++;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto split = line.find_first_of(" \t");
        if (split == std::string_view::npos) {
            throw ParseError(
                "line " + std::to_string(line_no) + ": expected '<coeff> <pauli>'", line_no);
        }
        std::string_view coeff_text = line.substr(0, split);
        std::string_view pauli_text = trim(line.substr(split));
        if (coeff_text.find_first_of("jJi(") != std::string_view::npos) {
            throw ParseError(
                "line " + std::to_string(line_no) +
                    ": complex coefficients are not supported (observable must be Hermitian "
                    "with real Pauli weights)",
                line_no);
        }
        double coeff = 0;
        const char *first = coeff_text.data();
        const char *last = first + coeff_text.size();
        if (*first == '+') {
            first++;
        }
        auto [ptr, ec] = std::from_chars(first, last, coeff);
        if (ec != std::errc() || ptr != last) {
            throw ParseError(
                "line " + std::to_string(line_no) + ": malformed coefficient '" +
                    std::string(coeff_text) + "'",
                line_no);
        }
        PauliString p;
        try {
            p = PauliString::parse(pauli_text);
        } catch (const ParseError &e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
        }
        if (n == 0) {
            n = p.num_qubits();
        } else if (p.num_qubits() != n) {
            throw DimensionError(
                "line " + std::to_string(line_no) + ": Pauli string has " +
                std::to_string(p.num_qubits()) + " qubits, earlier lines have " + std::to_string(n));
        }
        if (p.is_identity()) {
            offset += coeff;
        } else {
            terms.push_back({coeff, p});
        }
    }
    if (n == 0) {
        throw ParseError("observable has no terms", line_no);
    }
    return Observable(n, std::move(terms), offset, drop_threshold);
}

std::string format_observable(const Observable &obs) {
    std::string out;
    if (obs.offset() != 0.0) {
        out += shortest_repr(obs.offset()) + " " + std::string(obs.num_qubits(), 'I') + "\n";
    }
    for (const auto &t : obs.terms()) {
        out += shortest_repr(t.coeff) + " " + t.pauli.str() + "\n";
    }
    if (out.empty()) {
        out = "0 " + std::string(obs.num_qubits(), 'I') + "\n";
    }
    return out;
}

Observable load_observable(const std::string &path, double drop_threshold) {
    std::ifstream f(path);
    if (!f) {
        throw PreconditionError("file not found: " + path);
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_observable(buf.str(), drop_threshold);
}

}  // namespace ogm
