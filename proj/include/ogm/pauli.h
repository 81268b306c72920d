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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ogm {

/// Maximum qubit count representable by a PauliString.
inline constexpr std::size_t kMaxQubits = 64;

/// An n-qubit tensor product of single-qubit Paulis from {I, X, Y, Z}.
///
/// Stored as two bit masks: qubit k carries X when only x-bit k is set, Z when
/// only z-bit k is set, Y when both are set, and I when neither is. Qubit 0 is
/// the leftmost character of the text form (printed as qubit 1 in
/// diagnostics).
class PauliString {
   public:
    PauliString() = default;

    /// All-identity string on `num_qubits` qubits.
    explicit PauliString(std::size_t num_qubits);
    PauliString(std::size_t num_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

    /// Parses "XIZY..."; throws ParseError with a 1-based character position.
    static PauliString parse(std::string_view text);

    std::size_t num_qubits() const {
        return n_;
    }
    std::uint64_t x_mask() const {
        return x_;
    }
    std::uint64_t z_mask() const {
        return z_;
    }
    std::uint64_t support_mask() const {
        return x_ | z_;
    }

    /// Letter at 0-based qubit `k`: one of 'I', 'X', 'Y', 'Z'.
    char letter(std::size_t k) const;
    void set_letter(std::size_t k, char c);

    /// 0-based indices of non-identity positions.
    std::vector<std::size_t> support() const;
    std::size_t weight() const;
    bool is_identity() const {
        return (x_ | z_) == 0;
    }
    std::size_t num_y() const;

    std::string str() const;

    bool operator==(const PauliString &other) const = default;
    /// Lexicographic order of the text form (I < X < Y < Z).
    bool operator<(const PauliString &other) const;

   private:
    std::size_t n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

/// True iff every position of `q` equals the matching position of `r` or is I
/// (measuring basis `r` also measures `q`).
bool covers(const PauliString &q, const PauliString &r);

/// True iff `q` and `r` agree wherever both are non-identity.
bool compatible(const PauliString &q, const PauliString &r);

/// Least common covering basis of two compatible strings. Throws
/// IncompatibleError otherwise; never multiplies X by Z into Y.
PauliString join(const PauliString &q, const PauliString &r);

/// Letter-wise product of two compatible strings: equal letters cancel to I,
/// I acts as the unit. The phase of such a product is always +1.
PauliString compatible_product(const PauliString &q, const PauliString &r);

}  // namespace ogm

template <>
struct std::hash<ogm::PauliString> {
    std::size_t operator()(const ogm::PauliString &p) const noexcept {
        std::uint64_t h = p.x_mask() * 0x9E3779B97F4A7C15ULL;
        h ^= (p.z_mask() + 0x7F4A7C15ULL) * 0xBF58476D1CE4E5B9ULL;
        h ^= p.num_qubits();
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};
