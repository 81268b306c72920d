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

#include "ogm/pauli.h"

#include <bit>

#include "ogm/error.h"

namespace ogm {

namespace {

void require_same_size(const PauliString &q, const PauliString &r) {
    if (q.num_qubits() != r.num_qubits()) {
        throw DimensionError(
            "Pauli strings have different qubit counts: " + std::to_string(q.num_qubits()) +
            " vs " + std::to_string(r.num_qubits()));
    }
}

std::uint64_t low_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

int letter_rank(char c) {
    switch (c) {
        case 'I':
            return 0;
        case 'X':
            return 1;
        case 'Y':
            return 2;
        default:
            return 3;
    }
}

}  // namespace

PauliString::PauliString(std::size_t num_qubits) : PauliString(num_qubits, 0, 0) {
}

PauliString::PauliString(std::size_t num_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_(num_qubits), x_(x_mask), z_(z_mask) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw PreconditionError(
            "qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
            std::to_string(num_qubits));
    }
    if (((x_mask | z_mask) & ~low_mask(num_qubits)) != 0) {
        throw PreconditionError("Pauli masks set bits beyond the qubit count");
    }
}

PauliString PauliString::parse(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty Pauli string (zero qubits is not allowed)", 0);
    }
    if (text.size() > kMaxQubits) {
        throw ParseError(
            "Pauli string longer than " + std::to_string(kMaxQubits) + " qubits", kMaxQubits + 1);
    }
    PauliString result(text.size());
    for (std::size_t k = 0; k < text.size(); k++) {
        char c = text[k];
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw ParseError(
                "invalid Pauli character '" + std::string(1, c) + "' at position " +
                    std::to_string(k + 1),
                k + 1);
        }
        result.set_letter(k, c);
    }
    return result;
}

char PauliString::letter(std::size_t k) const {
    bool x = (x_ >> k) & 1;
    bool z = (z_ >> k) & 1;
    static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[x | (z << 1)];
}

void PauliString::set_letter(std::size_t k, char c) {
    if (k >= n_) {
        throw PreconditionError("qubit index out of range");
    }
    std::uint64_t bit = std::uint64_t{1} << k;
    x_ &= ~bit;
    z_ &= ~bit;
    switch (c) {
        case 'I':
            break;
        case 'X':
            x_ |= bit;
            break;
        case 'Y':
            x_ |= bit;
            z_ |= bit;
            break;
        case 'Z':
            z_ |= bit;
            break;
        default:
            throw PreconditionError("invalid Pauli letter");
    }
}

std::vector<std::size_t> PauliString::support() const {
    std::vector<std::size_t> out;
    for (std::uint64_t m = support_mask(); m != 0; m &= m - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    }
    return out;
}

std::size_t PauliString::weight() const {
    return static_cast<std::size_t>(std::popcount(support_mask()));
}

std::size_t PauliString::num_y() const {
    return static_cast<std::size_t>(std::popcount(x_ & z_));
}

std::string PauliString::str() const {
    std::string out(n_, 'I');
    for (std::size_t k = 0; k < n_; k++) {
        out[k] = letter(k);
    }
    return out;
}

bool PauliString::operator<(const PauliString &other) const {
    std::size_t n = n_ < other.n_ ? n_ : other.n_;
    for (std::size_t k = 0; k < n; k++) {
        int a = letter_rank(letter(k));
        int b = letter_rank(other.letter(k));
        if (a != b) {
            return a < b;
        }
    }
    return n_ < other.n_;
}

bool covers(const PauliString &q, const PauliString &r) {
    require_same_size(q, r);
    std::uint64_t differ = (q.x_mask() ^ r.x_mask()) | (q.z_mask() ^ r.z_mask());
    return (differ & q.support_mask()) == 0;
}

bool compatible(const PauliString &q, const PauliString &r) {
    require_same_size(q, r);
    std::uint64_t differ = (q.x_mask() ^ r.x_mask()) | (q.z_mask() ^ r.z_mask());
    return (differ & q.support_mask() & r.support_mask()) == 0;
}

PauliString join(const PauliString &q, const PauliString &r) {
    if (!compatible(q, r)) {
        throw IncompatibleError("cannot join incompatible Pauli strings " + q.str() + " and " + r.str());
    }
    return PauliString(q.num_qubits(), q.x_mask() | r.x_mask(), q.z_mask() | r.z_mask());
}

PauliString compatible_product(const PauliString &q, const PauliString &r) {
    if (!compatible(q, r)) {
        throw IncompatibleError(
            "product of incompatible Pauli strings " + q.str() + " and " + r.str() +
            " carries a non-trivial phase");
    }
    return PauliString(q.num_qubits(), q.x_mask() ^ r.x_mask(), q.z_mask() ^ r.z_mask());
}

}  // namespace ogm
