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

#include "ogm/kernels.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace ogm::kernels {
namespace {

std::vector<Amplitude> random_amps(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<Amplitude> a(std::size_t{1} << n);
    for (auto &x : a) {
        x = {g(rng), g(rng)};
    }
    return a;
}

int sign(std::uint64_t b, std::uint64_t z) {
    return (__builtin_popcountll(b & z) & 1) ? -1 : 1;
}

TEST(ScalarKernels, MatchDefinitions) {
    const auto &k = scalar_kernels();
    auto amps = random_amps(5, 1);
    std::uint64_t x = 0b10110, z = 0b01101;
    Amplitude expected = 0;
    for (std::uint64_t b = 0; b < amps.size(); b++) {
        expected += std::conj(amps[b ^ x]) * static_cast<double>(sign(b, z)) * amps[b];
    }
    auto got = k.pauli_overlap(amps, x, z);
    EXPECT_NEAR(std::abs(got - expected), 0.0, 1e-12);

    std::vector<Amplitude> out(amps.size(), 0), ref(amps.size(), 0);
    Amplitude factor(0.3, -1.1);
    k.pauli_accumulate(out, amps, x, z, factor);
    for (std::uint64_t b = 0; b < amps.size(); b++) {
        ref[b ^ x] += factor * static_cast<double>(sign(b, z)) * amps[b];
    }
    for (std::size_t b = 0; b < amps.size(); b++) {
        EXPECT_NEAR(std::abs(out[b] - ref[b]), 0.0, 1e-13);
    }

    std::vector<double> p(amps.size());
    k.probabilities(amps, p);
    for (std::size_t b = 0; b < amps.size(); b++) {
        EXPECT_DOUBLE_EQ(p[b], std::norm(amps[b]));
    }
}

TEST(Avx2Kernels, AgreeWithScalar) {
    const KernelTable *fast = avx2_kernels();
    if (!fast) {
        GTEST_SKIP() << "AVX2 not available on this machine";
    }
    const auto &ref = scalar_kernels();
    std::mt19937_64 rng(4);
    for (std::size_t n = 1; n <= 10; n++) {
        auto amps = random_amps(n, n);
        std::uint64_t mask = (std::uint64_t{1} << n) - 1;
        for (int trial = 0; trial < 20; trial++) {
            std::uint64_t x = rng() & mask, z = rng() & mask;
            auto a = ref.pauli_overlap(amps, x, z);
            auto b = fast->pauli_overlap(amps, x, z);
            EXPECT_NEAR(std::abs(a - b), 0.0, 1e-12 * amps.size());

            std::vector<Amplitude> out_a(amps.size(), 1.0), out_b(amps.size(), 1.0);
            Amplitude factor(0.7, 0.2);
            ref.pauli_accumulate(out_a, amps, x, z, factor);
            fast->pauli_accumulate(out_b, amps, x, z, factor);
            for (std::size_t i = 0; i < amps.size(); i++) {
                EXPECT_NEAR(std::abs(out_a[i] - out_b[i]), 0.0, 1e-13);
            }
        }
        std::vector<double> pa(amps.size()), pb(amps.size());
        ref.probabilities(amps, pa);
        fast->probabilities(amps, pb);
        for (std::size_t i = 0; i < amps.size(); i++) {
            EXPECT_NEAR(pa[i], pb[i], 1e-14 * (1 + pa[i]));
        }
    }
}

TEST(Dispatch, ActiveTableIsOneOfTheVariants) {
    const auto &active = active_kernels();
    EXPECT_TRUE(&active == &scalar_kernels() || &active == avx2_kernels());
    EXPECT_FALSE(active.name.empty());
}

}  // namespace
}  // namespace ogm::kernels
