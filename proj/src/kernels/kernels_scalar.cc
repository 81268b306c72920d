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

#include <bit>

#include "ogm/kernels.h"

namespace ogm::kernels {

namespace {

inline double parity_sign(std::uint64_t v) {
    return (std::popcount(v) & 1) ? -1.0 : 1.0;
}

Amplitude overlap_scalar(std::span<const Amplitude> amps, std::uint64_t x, std::uint64_t z) {
    double re = 0;
    double im = 0;
    for (std::uint64_t b = 0; b < amps.size(); b++) {
        Amplitude a = amps[b ^ x];
        Amplitude c = amps[b];
        double s = parity_sign(b & z);
        re += s * (a.real() * c.real() + a.imag() * c.imag());
        im += s * (a.real() * c.imag() - a.imag() * c.real());
    }
    return {re, im};
}

void accumulate_scalar(std::span<Amplitude> out, std::span<const Amplitude> in, std::uint64_t x,
                       std::uint64_t z, Amplitude factor) {
    for (std::uint64_t b = 0; b < in.size(); b++) {
        out[b ^ x] += parity_sign(b & z) * factor * in[b];
    }
}

void probabilities_scalar(std::span<const Amplitude> amps, std::span<double> out) {
    for (std::size_t b = 0; b < amps.size(); b++) {
        out[b] = std::norm(amps[b]);
    }
}

}  // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table{"scalar", overlap_scalar, accumulate_scalar,
                                   probabilities_scalar};
    return table;
}

}  // namespace ogm::kernels
