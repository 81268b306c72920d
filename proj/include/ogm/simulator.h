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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ogm/observable.h"
#include "ogm/pauli.h"
#include "ogm/sampler.h"

namespace ogm {

inline constexpr std::size_t kMaxSimulatedQubits = 16;

/// A normalised pure state on n <= 16 qubits. Basis index bit k is qubit k
/// (the k-th character of a Pauli string, counting from 0 on the left).
class StateVector {
   public:
    using Amplitude = std::complex<double>;

    /// Throws DimensionError unless amps.size() == 2^n and PreconditionError
    /// unless the norm is 1 within 1e-10.
    StateVector(std::size_t num_qubits, std::vector<Amplitude> amps);

    static StateVector zero(std::size_t num_qubits);
    /// (|0...0> + |1...1>) / sqrt(2).
    static StateVector ghz(std::size_t num_qubits);
    /// Uniformly random real amplitudes in [-1, 1), normalised.
    static StateVector random_real(std::size_t num_qubits, std::uint64_t seed);

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t dimension() const {
        return amps_.size();
    }
    const std::vector<Amplitude> &amplitudes() const {
        return amps_;
    }

   private:
    std::size_t n_;
    std::vector<Amplitude> amps_;
};

/// Text state file: first non-comment line holds n, then 2^n lines "re im".
StateVector parse_state(const std::string &text);
std::string format_state(const StateVector &state);
StateVector load_state(const std::string &path);

/// <psi|Q|psi>. Throws DimensionError on mismatch and NumericalError if the
/// imaginary residue exceeds 1e-10.
double pauli_expectation(const StateVector &state, const PauliString &q);

/// Σ_j coeff_j <Q_j> + offset.
double expectation(const StateVector &state, const Observable &obs);

/// out = (obs) in, offset included.
void apply_observable(const Observable &obs, const std::vector<StateVector::Amplitude> &in,
                      std::vector<StateVector::Amplitude> &out);

struct GroundState {
    StateVector state;
    double energy;
    double residual;
};

/// Lowest eigenpair by restarted Lanczos (dense diagonalisation for tiny
/// spaces). Throws NumericalError if ||H psi - E psi|| > tolerance after the
/// iteration cap.
GroundState ground_state(const Observable &obs, double tolerance = 1e-8,
                         std::size_t max_restarts = 500);

/// One shot's outcomes. Bit k of `minus_mask` is set when qubit k read -1.
struct MeasurementRecord {
    PauliString basis;
    std::uint64_t minus_mask = 0;

    int outcome(std::size_t k) const {
        return ((minus_mask >> k) & 1) ? -1 : 1;
    }
    /// Product of outcomes over the set bits of `support`.
    int parity(std::uint64_t support) const;

    bool operator==(const MeasurementRecord &) const = default;
};

/// Born-rule outcome distribution after rotating every qubit into its basis
/// letter's eigenframe (identity positions are read in Z). Index bit k = 1
/// means qubit k read -1.
std::vector<double> outcome_distribution(const StateVector &state, const PauliString &basis);

/// `shots` independent single-shot measurements in `basis`.
std::vector<MeasurementRecord> measure(const StateVector &state, const PauliString &basis,
                                       std::size_t shots, std::uint64_t seed);

/// Measures every entry of \`list\` for its shot count; entry i draws from
/// sub-seed derive_seed(seed, i). Records come out in list order.
std::vector<MeasurementRecord> execute(const StateVector &state, const FixedMeasurementList &list,
                                       std::uint64_t seed);

}  // namespace ogm
