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
#include <vector>

namespace ogm {

/// Cost of the form  Σ_j w_j / χ_j(K) + constant,  χ_j(K) = Σ_{s∈cover_j} K_s,
/// over the probability simplex. Terms whose cover list is empty contribute
/// `uncovered_weight_j` to the constant instead.
class CoverageCost {
   public:
    CoverageCost(std::size_t num_groups, std::vector<std::vector<std::size_t>> covers,
                 std::vector<double> weights, std::vector<double> uncovered_penalties);

    std::size_t num_groups() const {
        return num_groups_;
    }

    /// Value at `k`; writes dCost/dK_s into `grad` when non-null.
    double operator()(const std::vector<double> &k, std::vector<double> *grad = nullptr) const;

   private:
    std::size_t num_groups_;
    std::vector<std::vector<std::size_t>> covers_;
    std::vector<double> weights_;
    double constant_ = 0.0;
};

struct SimplexResult {
    std::vector<double> k;
    double cost = 0.0;
    std::size_t iterations = 0;
};

/// Local minimiser over the simplex using a softmax parameterisation and
/// L-BFGS with Armijo backtracking. Stops when the relative cost change of an
/// accepted step falls below `tolerance` or after `max_iterations`. Never
/// returns a point worse than `start`.
SimplexResult minimize_on_simplex(const CoverageCost &cost, std::vector<double> start,
                                  double tolerance, std::size_t max_iterations);

}  // namespace ogm
