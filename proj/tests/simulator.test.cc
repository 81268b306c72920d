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

#include "ogm/simulator.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ogm/error.h"
#include "oracle.h"

namespace ogm {
namespace {

PauliString P(const char *s) {
    return PauliString::parse(s);
}

TEST(StateVector, Validation) {
    EXPECT_THROW(StateVector(2, {1, 0, 0}), DimensionError);
    EXPECT_THROW(StateVector(1, {1, 1}), PreconditionError);
    EXPECT_NO_THROW(StateVector(1, {0, 1}));
}

TEST(StateVector, QubitOrderConvention) {
    // Amplitude index bit 0 is the leftmost qubit.
    StateVector s(3, {0, 1, 0, 0, 0, 0, 0, 0});
    EXPECT_EQ(pauli_expectation(s, P("ZII")), -1.0);
    EXPECT_EQ(pauli_expectation(s, P("IZI")), 1.0);
}

TEST(PauliExpectation, GhzStabilizers) {
    auto ghz = StateVector::ghz(3);
    EXPECT_NEAR(pauli_expectation(ghz, P("XXX")), 1.0, 1e-15);
    EXPECT_NEAR(pauli_expectation(ghz, P("XXI")), 0.0, 1e-15);
    EXPECT_NEAR(pauli_expectation(ghz, P("ZZI")), 1.0, 1e-15);
    EXPECT_NEAR(pauli_expectation(ghz, P("XYY")), -1.0, 1e-15);
}

TEST(PauliExpectation, MatchesDenseOracle) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t n = 1 + trial % 4;
        auto state = oracle::random_state(n, rng);
        auto q = oracle::random_pauli(n, rng);
        EXPECT_NEAR(pauli_expectation(state, P(q.c_str())),
                    oracle::expectation(oracle::to_vec(state), oracle::pauli_matrix(q)), 1e-12)
            << q;
    }
}

TEST(Expectation, Examples) {
    EXPECT_NEAR(expectation(StateVector::ghz(3), oracle::example_observable()), 1.0 / 3, 1e-15);
    EXPECT_NEAR(expectation(StateVector::zero(3), parse_observable("1 ZZZ\n")), 1.0, 1e-15);
    std::mt19937_64 rng(1);
    auto state = oracle::random_state(2, rng);
    Observable offset_only(2, {}, 2.5);
    EXPECT_NEAR(expectation(state, offset_only), 2.5, 1e-15);
    EXPECT_THROW(expectation(state, oracle::example_observable()), DimensionError);
}

TEST(ApplyObservable, MatchesDenseOracle) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; trial++) {
        auto obs = oracle::random_observable(4, 10, rng);
        Observable with_offset(4, obs.terms(), 0.25);
        auto state = oracle::random_state(4, rng);
        std::vector<StateVector::Amplitude> out;
        apply_observable(with_offset, state.amplitudes(), out);
        oracle::Vec ref = oracle::observable_matrix(with_offset) * oracle::to_vec(state);
        for (std::size_t i = 0; i < out.size(); i++) {
            EXPECT_NEAR(std::abs(out[i] - ref(i)), 0.0, 1e-12);
        }
    }
}

TEST(GroundState, SingleQubitExamples) {
    // -Z|0> = -|0>, so the minimum sits on |0>; +Z puts it on |1>.
    auto minus_z = ground_state(parse_observable("-1 Z\n"));
    EXPECT_NEAR(minus_z.energy, -1.0, 1e-10);
    EXPECT_NEAR(std::norm(minus_z.state.amplitudes()[0]), 1.0, 1e-10);
    auto plus_z = ground_state(parse_observable("1 Z\n"));
    EXPECT_NEAR(std::norm(plus_z.state.amplitudes()[1]), 1.0, 1e-10);

    auto x = ground_state(parse_observable("1 X\n"));
    EXPECT_NEAR(x.energy, -1.0, 1e-10);
    auto a = x.state.amplitudes();
    EXPECT_NEAR(std::abs(a[0] + a[1]), 0.0, 1e-8);
}

TEST(GroundState, HeisenbergSinglet) {
    auto g = ground_state(parse_observable("1 XX\n1 YY\n1 ZZ\n"));
    EXPECT_NEAR(g.energy, -3.0, 1e-10);
    EXPECT_NEAR(pauli_expectation(g.state, P("ZZ")), -1.0, 1e-8);
    EXPECT_LE(g.residual, 1e-8);
}

TEST(GroundState, MatchesDenseDiagonalisation) {
    std::mt19937_64 rng(23);
    for (std::size_t n : {3u, 5u, 7u, 9u}) {
        auto obs = oracle::random_observable(n, 3 * n, rng);
        Observable shifted(n, obs.terms(), -0.5);
        auto g = ground_state(shifted);
        Eigen::SelfAdjointEigenSolver<oracle::Mat> solver(oracle::observable_matrix(shifted));
        EXPECT_NEAR(g.energy, solver.eigenvalues()(0), 1e-8) << n;
        EXPECT_LE(g.residual, 1e-8);
        EXPECT_NEAR(expectation(g.state, shifted), g.energy, 1e-8);
        for (int t = 0; t < 5; t++) {
            EXPECT_LE(g.energy, expectation(oracle::random_state(n, rng), shifted) + 1e-12);
        }
    }
}

TEST(OutcomeDistribution, MatchesBornRule) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; trial++) {
        std::size_t n = 1 + trial % 4;
        auto state = oracle::random_state(n, rng);
        std::string basis(n, 'X');
        for (auto &c : basis) {
            c = "XYZ"[rng() % 3];
        }
        auto got = outcome_distribution(state, P(basis.c_str()));
        auto ref = oracle::born(oracle::to_vec(state), basis);
        for (std::size_t b = 0; b < got.size(); b++) {
            EXPECT_NEAR(got[b], ref[b], 1e-12) << basis;
        }
    }
}

TEST(Measure, DeterministicExamples) {
    for (const auto &r : measure(StateVector::zero(1), P("Z"), 100, 1)) {
        EXPECT_EQ(r.outcome(0), 1);
    }
    StateVector plus(1, {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)});
    for (const auto &r : measure(plus, P("X"), 100, 1)) {
        EXPECT_EQ(r.outcome(0), 1);
    }
    StateVector plus_i(1, {1 / std::sqrt(2.0), StateVector::Amplitude(0, 1 / std::sqrt(2.0))});
    for (const auto &r : measure(plus_i, P("Y"), 100, 1)) {
        EXPECT_EQ(r.outcome(0), 1);
    }
}

TEST(Measure, GhzParities) {
    auto records = measure(StateVector::ghz(3), P("ZZZ"), 10000, 3);
    std::size_t all_plus = 0;
    for (const auto &r : records) {
        EXPECT_EQ(r.outcome(0) * r.outcome(1), 1);
        EXPECT_EQ(r.parity(0b011), 1);
        all_plus += r.minus_mask == 0;
    }
    EXPECT_NEAR(all_plus / 10000.0, 0.5, 4 * std::sqrt(0.25 / 10000));
}

TEST(Measure, EmpiricalParityMatchesExpectation) {
    std::mt19937_64 rng(9);
    auto state = oracle::random_state(3, rng);
    const std::size_t shots = 100000;
    for (const char *basis : {"XYZ", "ZZX", "YYY"}) {
        auto records = measure(state, P(basis), shots, 12);
        for (std::uint64_t subset = 1; subset < 8; subset++) {
            double sum = 0;
            for (const auto &r : records) {
                sum += r.parity(subset);
            }
            std::string sub(3, 'I');
            for (std::size_t k = 0; k < 3; k++) {
                if ((subset >> k) & 1) {
                    sub[k] = basis[k];
                }
            }
            double mean = pauli_expectation(state, P(sub.c_str()));
            double sigma = std::sqrt((1 - mean * mean) / shots);
            EXPECT_NEAR(sum / shots, mean, 4 * sigma + 1e-12) << sub;
        }
    }
}

TEST(Measure, Reproducible) {
    auto state = StateVector::random_real(4, 3);
    EXPECT_EQ(measure(state, P("XYZX"), 50, 8), measure(state, P("XYZX"), 50, 8));
}

TEST(Execute, FollowsListOrder) {
    FixedMeasurementList list{2, {{P("XX"), 3}, {P("ZZ"), 2}}};
    auto records = execute(StateVector::zero(2), list, 4);
    ASSERT_EQ(records.size(), 5u);
    EXPECT_EQ(records[0].basis, P("XX"));
    EXPECT_EQ(records[4].basis, P("ZZ"));
    EXPECT_EQ(records[4].minus_mask, 0u);
}

TEST(StateIo, RoundTrip) {
    std::mt19937_64 rng(4);
    auto state = oracle::random_state(3, rng);
    auto back = parse_state(format_state(state));
    EXPECT_EQ(back.amplitudes(), state.amplitudes());
    EXPECT_THROW(parse_state("2\n1 0\n0 0\n"), DimensionError);
}

TEST(RandomReal, RealAndNormalised) {
    auto s = StateVector::random_real(5, 77);
    double norm = 0;
    for (auto a : s.amplitudes()) {
        EXPECT_EQ(a.imag(), 0.0);
        norm += std::norm(a);
    }
    EXPECT_NEAR(norm, 1.0, 1e-12);
}

}  // namespace
}  // namespace ogm
