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
#include <cstdint>
#include <span>
#include <string_view>

namespace ogm::kernels {

using Amplitude = std::complex<double>;

/// Inner loops over a 2^n statevector. Basis index bit k is qubit k.
///
/// For a Pauli string with masks (x, z), Q|b> = i^{#Y} (-1)^{|b & z|} |b ^ x>.
/// The kernels work without the i^{#Y} factor; callers fold it in.
struct KernelTable {
    std::string_view name;

    /// Σ_b conj(amps[b ^ x]) (-1)^{|b & z|} amps[b].
    Amplitude (*pauli_overlap)(std::span<const Amplitude> amps, std::uint64_t x, std::uint64_t z);

    /// out[b ^ x] += factor (-1)^{|b & z|} in[b] for every b.
    void (*pauli_accumulate)(std::span<Amplitude> out, std::span<const Amplitude> in,
                             std::uint64_t x, std::uint64_t z, Amplitude factor);

    /// out[b] = |amps[b]|^2.
    void (*probabilities)(std::span<const Amplitude> amps, std::span<double> out);
};

const KernelTable &scalar_kernels();

/// AVX2+FMA variant, or nullptr when the build target or CPU lacks it.
const KernelTable *avx2_kernels();

/// The table used by the simulator: AVX2 when available, unless the
/// environment variable OGM_FORCE_SCALAR is set to a non-empty value.
const KernelTable &active_kernels();

}  // namespace ogm::kernels
