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
#include <string>
#include <string_view>
#include <vector>

#include "ogm/pauli.h"

namespace ogm {

struct WeightedTerm {
    double coeff = 0.0;
    PauliString pauli;

    bool operator==(const WeightedTerm &) const = default;
};

/// A real-weighted sum of Pauli strings plus an identity offset.
///
/// Terms are merged (no duplicate strings), free of identity strings and
/// zero coefficients, and kept in canonical order: descending |coeff|, ties
/// broken by the lexicographic text of the string. Every weight-ordered
/// algorithm in the library relies on that order.
class Observable {
   public:
    Observable() = default;
    /// Merges duplicates, folds identity terms into the offset, drops terms
    /// with |coeff| <= drop_threshold (zero coefficients are always dropped)
    /// and sorts canonically.
    Observable(std::size_t num_qubits, std::vector<WeightedTerm> terms, double offset = 0.0,
               double drop_threshold = 0.0);

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }
    const std::vector<WeightedTerm> &terms() const {
        return terms_;
    }
    const WeightedTerm &operator[](std::size_t j) const {
        return terms_[j];
    }
    double offset() const {
        return offset_;
    }

    double l1_norm() const;
    /// Largest support size over the terms (0 when empty).
    std::size_t locality() const;

    bool operator==(const Observable &) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<WeightedTerm> terms_;
    double offset_ = 0.0;
};

/// Canonical ordering predicate used for every weight-sorted sequence.
bool canonical_before(const WeightedTerm &a, const WeightedTerm &b);

/// Parses the line format `<coeff> <pauli>` with `#` comments and blank lines.
/// Line numbers in ParseError are 1-based.
Observable parse_observable(std::string_view text, double drop_threshold = 0.0);

/// Inverse of parse_observable; coefficients printed with round-trip precision.
std::string format_observable(const Observable &obs);

Observable load_observable(const std::string &path, double drop_threshold = 0.0);

}  // namespace ogm
