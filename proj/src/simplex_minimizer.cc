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

#include "ogm/simplex_minimizer.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "ogm/error.h"

namespace ogm {

CoverageCost::CoverageCost(std::size_t num_groups, std::vector<std::vector<std::size_t>> covers,
                           std::vector<double> weights, std::vector<double> uncovered_penalties)
    : num_groups_(num_groups) {
    if (covers.size() != weights.size() || weights.size() != uncovered_penalties.size()) {
        throw PreconditionError("CoverageCost inputs have mismatched lengths");
    }
    for (std::size_t j = 0; j < covers.size(); j++) {
        if (covers[j].empty()) {
            constant_ += uncovered_penalties[j];
        } else {
            covers_.push_back(std::move(covers[j]));
            weights_.push_back(weights[j]);
        }
    }
}

double CoverageCost::operator()(const std::vector<double> &k, std::vector<double> *grad) const {
    if (grad) {
        grad->assign(num_groups_, 0.0);
    }
    double total = constant_;
    for (std::size_t j = 0; j < covers_.size(); j++) {
        double chi = 0;
        for (auto s : covers_[j]) {
            chi += k[s];
        }
        if (chi <= 0) {
            if (grad) {
                std::fill(grad->begin(), grad->end(), 0.0);
            }
            return std::numeric_limits<double>::infinity();
        }
        total += weights_[j] / chi;
        if (grad) {
            double d = -weights_[j] / (chi * chi);
            for (auto s : covers_[j]) {
                (*grad)[s] += d;
            }
        }
    }
    return total;
}

namespace {

std::vector<double> softmax(const std::vector<double> &theta) {
    double mx = *std::max_element(theta.begin(), theta.end());
    std::vector<double> k(theta.size());
    double s = 0;
    for (std::size_t i = 0; i < theta.size(); i++) {
        k[i] = std::exp(theta[i] - mx);
        s += k[i];
    }
    for (auto &v : k) {
        v /= s;
    }
    return k;
}

double dot(const std::vector<double> &a, const std::vector<double> &b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

// Cost and gradient with respect to the softmax parameters.
double theta_cost(const CoverageCost &cost, const std::vector<double> &theta,
                  std::vector<double> &grad_theta) {
    auto k = softmax(theta);
    std::vector<double> gk;
    double f = cost(k, &gk);
    double mean = dot(k, gk);
    grad_theta.resize(k.size());
    for (std::size_t s = 0; s < k.size(); s++) {
        grad_theta[s] = k[s] * (gk[s] - mean);
    }
    return f;
}

}  // namespace

SimplexResult minimize_on_simplex(const CoverageCost &cost, std::vector<double> start,
                                  double tolerance, std::size_t max_iterations) {
    std::size_t dim = cost.num_groups();
    if (start.size() != dim || dim == 0) {
        throw PreconditionError("simplex start point has the wrong dimension");
    }
    double total = std::accumulate(start.begin(), start.end(), 0.0);
    if (!(total > 0)) {
        throw PreconditionError("simplex start point must have positive mass");
    }
    for (auto &v : start) {
        v /= total;
    }
    SimplexResult best{start, cost(start), 0};
    if (dim == 1) {
        return best;
    }

    // Zero-probability groups are pinned far down the softmax.
    constexpr double floor_theta = -700.0;
    std::vector<double> theta(dim);
    for (std::size_t s = 0; s < dim; s++) {
        theta[s] = start[s] > 0 ? std::log(start[s]) : floor_theta;
    }

    constexpr std::size_t memory = 8;
    std::deque<std::vector<double>> s_hist, y_hist;
    std::vector<double> grad;
    double f = theta_cost(cost, theta, grad);
    if (!std::isfinite(f)) {
        return best;
    }

    std::size_t it = 0;
    for (; it < max_iterations; it++) {
        // Two-loop recursion.
        std::vector<double> q = grad;
        std::vector<double> alpha(s_hist.size());
        for (std::size_t i = s_hist.size(); i-- > 0;) {
            double rho = 1.0 / dot(y_hist[i], s_hist[i]);
            alpha[i] = rho * dot(s_hist[i], q);
            for (std::size_t d = 0; d < dim; d++) {
                q[d] -= alpha[i] * y_hist[i][d];
            }
        }
        double gamma = 1.0;
        if (!s_hist.empty()) {
            gamma = dot(s_hist.back(), y_hist.back()) / dot(y_hist.back(), y_hist.back());
        } else {
            double gmax = 0;
            for (double g : grad) {
                gmax = std::max(gmax, std::abs(g));
            }
            gamma = gmax > 0 ? 1.0 / gmax : 1.0;
        }
        for (auto &v : q) {
            v *= gamma;
        }
        for (std::size_t i = 0; i < s_hist.size(); i++) {
            double rho = 1.0 / dot(y_hist[i], s_hist[i]);
            double beta = rho * dot(y_hist[i], q);
            for (std::size_t d = 0; d < dim; d++) {
                q[d] += s_hist[i][d] * (alpha[i] - beta);
            }
        }
        std::vector<double> dir(dim);
        for (std::size_t d = 0; d < dim; d++) {
            dir[d] = -q[d];
        }
        double slope = dot(grad, dir);
        if (!(slope < 0)) {
            s_hist.clear();
            y_hist.clear();
            for (std::size_t d = 0; d < dim; d++) {
                dir[d] = -grad[d];
            }
            slope = dot(grad, dir);
            if (!(slope < 0)) {
                break;  // stationary
            }
        }

        double step = 1.0;
        std::vector<double> next(dim), next_grad;
        double f_next = f;
        bool accepted = false;
        for (int ls = 0; ls < 60; ls++) {
            for (std::size_t d = 0; d < dim; d++) {
                next[d] = theta[d] + step * dir[d];
            }
            f_next = theta_cost(cost, next, next_grad);
            if (std::isfinite(f_next) && f_next <= f + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            break;
        }

        std::vector<double> sv(dim), yv(dim);
        for (std::size_t d = 0; d < dim; d++) {
            sv[d] = next[d] - theta[d];
            yv[d] = next_grad[d] - grad[d];
        }
        if (dot(sv, yv) > 1e-300) {
            s_hist.push_back(std::move(sv));
            y_hist.push_back(std::move(yv));
            if (s_hist.size() > memory) {
                s_hist.pop_front();
                y_hist.pop_front();
            }
        }
        double change = std::abs(f - f_next) / std::max(std::abs(f), 1e-300);
        theta = std::move(next);
        grad = std::move(next_grad);
        f = f_next;
        if (change < tolerance) {
            it++;
            break;
        }
    }

    auto k = softmax(theta);
    double fk = cost(k);
    if (fk <= best.cost) {
        best.k = std::move(k);
        best.cost = fk;
    }
    best.iterations = it;
    return best;
}

}  // namespace ogm
