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

#include "ogm/sampler.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "ogm/baseline.h"
#include "ogm/error.h"
#include "ogm/overlapped.h"
#include "oracle.h"

namespace ogm {
namespace {

MeasurementPlan two_basis_plan(double k0, double k1) {
    MeasurementPlan plan{Scheme::OGM, 2, {}, {}, {}};
    plan.groups.push_back(Group{{}, PauliString::parse("XX"), k0, k0});
    plan.groups.push_back(Group{{}, PauliString::parse("ZZ"), k1, k1});
    return plan;
}

std::map<std::string, std::size_t> shots_by_basis(const FixedMeasurementList &list) {
    std::map<std::string, std::size_t> out;
    for (const auto &e : list.entries) {
        out[e.basis.str()] += e.shots;
    }
    return out;
}

TEST(DrawIid, SingleGroupTakesEverything) {
    auto plan = grouping_plan(ldf_grouping(parse_observable("1 XI\n1 IX\n")), parse_observable("1 XI\n1 IX\n"));
    auto list = draw_iid(plan, 17, 1);
    ASSERT_EQ(list.entries.size(), 1u);
    EXPECT_EQ(list.entries[0].shots, 17u);
    EXPECT_EQ(list.entries[0].basis.str(), "XX");
}

TEST(DrawIid, BinomialCounts) {
    auto list = draw_iid(two_basis_plan(0.5, 0.5), 100000, 2);
    auto counts = shots_by_basis(list);
    double sigma = std::sqrt(100000 * 0.25);
    EXPECT_NEAR(static_cast<double>(counts["XX"]), 50000.0, 3 * sigma);
    EXPECT_EQ(list.total_shots(), 100000u);
}

TEST(DrawIid, UniformShadowLetterFrequencies) {
    auto list = draw_iid(cs_uniform_plan(3), 100000, 3);
    EXPECT_EQ(list.total_shots(), 100000u);
    double sigma = std::sqrt(100000 * (1.0 / 3) * (2.0 / 3));
    for (std::size_t k = 0; k < 3; k++) {
        std::map<char, double> freq;
        for (const auto &e : list.entries) {
            freq[e.basis.letter(k)] += static_cast<double>(e.shots);
        }
        for (char c : {'X', 'Y', 'Z'}) {
            EXPECT_NEAR(freq[c], 100000.0 / 3, 3 * sigma) << k << c;
        }
    }
}

TEST(DrawIid, ReproducibleAndRejectsZeroBudget) {
    auto plan = cs_uniform_plan(4);
    EXPECT_EQ(draw_iid(plan, 500, 9), draw_iid(plan, 500, 9));
    EXPECT_NE(draw_iid(plan, 500, 9), draw_iid(plan, 500, 10));
    EXPECT_THROW(draw_iid(plan, 0, 1), PreconditionError);
}

TEST(PartialDerandomize, IntegerProductsAreDeterministic) {
    auto plan = two_basis_plan(0.6, 0.4);
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        auto counts = shots_by_basis(partial_derandomize(plan, 10, seed));
        EXPECT_EQ(counts["XX"], 6u);
        EXPECT_EQ(counts["ZZ"], 4u);
    }
}

TEST(PartialDerandomize, HalfAndHalfOfThree) {
    auto plan = two_basis_plan(0.5, 0.5);
    std::size_t xx_two = 0;
    for (std::uint64_t seed = 0; seed < 4000; seed++) {
        auto counts = shots_by_basis(partial_derandomize(plan, 3, seed));
        EXPECT_EQ(counts["XX"] + counts["ZZ"], 3u);
        EXPECT_GE(counts["XX"], 1u);
        EXPECT_GE(counts["ZZ"], 1u);
        xx_two += counts["XX"] == 2;
    }
    EXPECT_NEAR(static_cast<double>(xx_two) / 4000, 0.5, 3 * std::sqrt(0.25 / 4000));
}

TEST(PartialDerandomize, ExpectationAndTotalOnOgmPlan) {
    auto obs = oracle::example_observable();
    auto plan = plan_ogm(obs, OverlapVersion::V1, {}).plan;
    const std::size_t budget = 37, runs = 10000;
    for (auto rule : {ResidualRule::Systematic, ResidualRule::Independent}) {
        std::vector<double> sum(plan.groups.size()), sum2(plan.groups.size());
        for (std::uint64_t seed = 0; seed < runs; seed++) {
            auto list = partial_derandomize(plan, budget, seed, rule);
            ASSERT_EQ(list.total_shots(), budget);
            auto counts = shots_by_basis(list);
            for (std::size_t g = 0; g < plan.groups.size(); g++) {
                double c = static_cast<double>(counts[plan.groups[g].basis.str()]);
                sum[g] += c;
                sum2[g] += c * c;
            }
        }
        for (std::size_t g = 0; g < plan.groups.size(); g++) {
            double mean = sum[g] / runs;
            double var = sum2[g] / runs - mean * mean;
            double expected = plan.groups[g].probability * budget;
            if (rule == ResidualRule::Systematic) {
                EXPECT_NEAR(mean, expected, 3 * std::sqrt(std::max(var, 1e-12) / runs));
            }
            // Never more spread than a binomial draw.
            double p = plan.groups[g].probability;
            EXPECT_LE(var, budget * p * (1 - p) + 1e-9);
        }
    }
}

TEST(PartialDerandomize, ShotsStayWithinFloorAndCeil) {
    auto obs = oracle::example_observable();
    auto plan = plan_ogm(obs, OverlapVersion::V2, {}).plan;
    for (std::size_t budget : {1u, 2u, 5u, 100u, 1001u}) {
        for (std::uint64_t seed = 0; seed < 50; seed++) {
            auto counts = shots_by_basis(partial_derandomize(plan, budget, seed));
            std::size_t total = 0;
            for (const auto &g : plan.groups) {
                double e = g.probability * budget;
                auto c = counts[g.basis.str()];
                EXPECT_GE(static_cast<double>(c), std::floor(e) - 1e-9);
                EXPECT_LE(static_cast<double>(c), std::ceil(e) + 1e-9);
                total += c;
            }
            EXPECT_EQ(total, budget);
        }
    }
}

TEST(PartialDerandomize, Preconditions) {
    EXPECT_THROW(partial_derandomize(two_basis_plan(0.5, 0.5), 0, 1), PreconditionError);
    EXPECT_THROW(partial_derandomize(cs_uniform_plan(2), 10, 1), PreconditionError);
}

TEST(FixedMeasurementList, CoverageCounts) {
    auto obs = parse_observable("1 XI\n1 IZ\n1 XZ\n");
    FixedMeasurementList list{2, {{PauliString::parse("XZ"), 3}, {PauliString::parse("XX"), 1}}};
    auto s = list.coverage(obs);
    std::map<std::string, std::size_t> by_term;
    for (std::size_t j = 0; j < obs.size(); j++) {
        by_term[obs[j].pauli.str()] = s[j];
    }
    EXPECT_EQ(by_term["XI"], 4u);
    EXPECT_EQ(by_term["IZ"], 3u);
    EXPECT_EQ(by_term["XZ"], 3u);
}

TEST(ListPlan, ProbabilitiesFollowShots) {
    auto obs = parse_observable("1 XI\n1 IZ\n");
    FixedMeasurementList list{2, {{PauliString::parse("XZ"), 3}, {PauliString::parse("XX"), 1}}};
    auto plan = list_plan(list, obs);
    EXPECT_EQ(plan.scheme, Scheme::External);
    EXPECT_EQ(plan.groups[0].probability, 0.75);
    EXPECT_EQ(plan.groups[0].members.size(), 2u);
    EXPECT_TRUE(plan.uncovered.empty());
    EXPECT_NO_THROW(plan.validate(obs));
}

}  // namespace
}  // namespace ogm
