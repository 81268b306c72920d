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

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "ogm/error.h"
#include "ogm/kernels.h"
#include "ogm/random.h"

namespace ogm {

using Amplitude = StateVector::Amplitude;

namespace {

void require_qubits(std::size_t n) {
    if (n < 1 || n > kMaxSimulatedQubits) {
        throw PreconditionError("simulator supports 1 to " + std::to_string(kMaxSimulatedQubits) +
                                " qubits, got " + std::to_string(n));
    }
}

double norm2(const std::vector<Amplitude> &v) {
    double s = 0;
    for (const auto &a : v) {
        s += std::norm(a);
    }
    return s;
}

Amplitude i_power(std::size_t k) {
    switch (k & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

Amplitude inner(const std::vector<Amplitude> &a, const std::vector<Amplitude> &b) {
    Amplitude s = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

std::vector<Amplitude> rotated(const StateVector &state, const PauliString &basis) {
    if (basis.num_qubits() != state.num_qubits()) {
        throw DimensionError("basis and state disagree on qubit count");
    }
    std::vector<Amplitude> psi = state.amplitudes();
    const double h = 1.0 / std::sqrt(2.0);
    for (std::size_t k = 0; k < basis.num_qubits(); k++) {
        char letter = basis.letter(k);
        if (letter != 'X' && letter != 'Y') {
            continue;
        }
        std::uint64_t bit = std::uint64_t{1} << k;
        for (std::uint64_t b = 0; b < psi.size(); b++) {
            if (b & bit) {
                continue;
            }
            Amplitude a0 = psi[b];
            Amplitude a1 = psi[b | bit];
            if (letter == 'Y') {
                a1 *= Amplitude(0, -1);
            }
            psi[b] = h * (a0 + a1);
            psi[b | bit] = h * (a0 - a1);
        }
    }
    return psi;
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits, std::vector<Amplitude> amps)
    : n_(num_qubits), amps_(std::move(amps)) {
    require_qubits(num_qubits);
    if (amps_.size() != (std::size_t{1} << num_qubits)) {
        throw DimensionError("state on " + std::to_string(num_qubits) + " qubits needs " +
                             std::to_string(std::size_t{1} << num_qubits) + " amplitudes, got " +
                             std::to_string(amps_.size()));
    }
    double nrm = norm2(amps_);
    if (!(std::abs(nrm - 1.0) <= 1e-10)) {
        throw PreconditionError("state is not normalised (squared norm " + std::to_string(nrm) + ")");
    }
}

StateVector StateVector::zero(std::size_t num_qubits) {
    require_qubits(num_qubits);
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
    amps[0] = 1;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::ghz(std::size_t num_qubits) {
    require_qubits(num_qubits);
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
    amps.front() = amps.back() = 1.0 / std::sqrt(2.0);
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::random_real(std::size_t num_qubits, std::uint64_t seed) {
    require_qubits(num_qubits);
    std::mt19937_64 rng(seed);
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
    for (auto &a : amps) {
        a = 2.0 * uniform01(rng) - 1.0;
    }
    double s = std::sqrt(norm2(amps));
    for (auto &a : amps) {
        a /= s;
    }
    return StateVector(num_qubits, std::move(amps));
}

StateVector parse_state(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    std::vector<Amplitude> amps;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        if (!have_header) {
            if (fields >> n) {
                have_header = true;
            } else if (line.find_first_not_of(" \t\r") != std::string::npos) {
                throw ParseError("line " + std::to_string(line_no) + ": expected qubit count",
                                 line_no);
            }
            continue;
        }
        double re = 0;
        double im = 0;
        if (!(fields >> re)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            throw ParseError("line " + std::to_string(line_no) + ": malformed amplitude", line_no);
        }
        if (!(fields >> im)) {
            im = 0;
        }
        amps.emplace_back(re, im);
    }
    if (!have_header) {
        throw ParseError("state file has no qubit-count header", line_no);
    }
    return StateVector(n, std::move(amps));
}

std::string format_state(const StateVector &state) {
    std::ostringstream out;
    out << std::setprecision(17) << state.num_qubits() << "\n";
    for (const auto &a : state.amplitudes()) {
        out << a.real() << " " << a.imag() << "\n";
    }
    return out.str();
}

StateVector load_state(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw PreconditionError("file not found: " + path);
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_state(buf.str());
}

double pauli_expectation(const StateVector &state, const PauliString &q) {
    if (q.num_qubits() != state.num_qubits()) {
        throw DimensionError("Pauli string and state disagree on qubit count");
    }
    Amplitude overlap = kernels::active_kernels().pauli_overlap(state.amplitudes(), q.x_mask(),
                                                                q.z_mask());
    Amplitude value = i_power(q.num_y()) * overlap;
    if (std::abs(value.imag()) > 1e-10) {
        throw NumericalError("expectation of " + q.str() + " has imaginary part " +
                             std::to_string(value.imag()));
    }
    return value.real();
}

double expectation(const StateVector &state, const Observable &obs) {
    if (obs.num_qubits() != state.num_qubits()) {
        throw DimensionError("observable and state disagree on qubit count");
    }
    double total = obs.offset();
    for (const auto &t : obs.terms()) {
        total += t.coeff * pauli_expectation(state, t.pauli);
    }
    return total;
}

void apply_observable(const Observable &obs, const std::vector<Amplitude> &in,
                      std::vector<Amplitude> &out) {
    if (in.size() != (std::size_t{1} << obs.num_qubits())) {
        throw DimensionError("vector size does not match observable qubit count");
    }
    out.assign(in.size(), Amplitude(0));
    for (std::size_t b = 0; b < in.size(); b++) {
        out[b] = obs.offset() * in[b];
    }
    const auto &k = kernels::active_kernels();
    for (const auto &t : obs.terms()) {
        k.pauli_accumulate(out, in, t.pauli.x_mask(), t.pauli.z_mask(),
                           t.coeff * i_power(t.pauli.num_y()));
    }
}

GroundState ground_state(const Observable &obs, double tolerance, std::size_t max_restarts) {
    std::size_t n = obs.num_qubits();
    require_qubits(n);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Amplitude> hv;

    auto residual_of = [&](const std::vector<Amplitude> &x, double e) {
        apply_observable(obs, x, hv);
        double r = 0;
        for (std::size_t i = 0; i < dim; i++) {
            r += std::norm(hv[i] - e * x[i]);
        }
        return std::sqrt(r);
    };

    if (dim <= 64) {
        Eigen::MatrixXcd h(dim, dim);
        std::vector<Amplitude> unit(dim);
        for (std::size_t c = 0; c < dim; c++) {
            std::fill(unit.begin(), unit.end(), Amplitude(0));
            unit[c] = 1;
            apply_observable(obs, unit, hv);
            for (std::size_t r = 0; r < dim; r++) {
                h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = hv[r];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
        if (solver.info() != Eigen::Success) {
            throw NumericalError("dense eigensolver failed");
        }
        std::vector<Amplitude> x(dim);
        for (std::size_t i = 0; i < dim; i++) {
            x[i] = solver.eigenvectors()(static_cast<Eigen::Index>(i), 0);
        }
        double nrm = std::sqrt(norm2(x));
        for (auto &a : x) {
            a /= nrm;
        }
        double e = solver.eigenvalues()(0);
        double res = residual_of(x, e);
        if (res > tolerance) {
            throw NumericalError("dense ground state residual " + std::to_string(res) +
                                 " exceeds tolerance");
        }
        return {StateVector(n, std::move(x)), e, res};
    }

    const std::size_t krylov = std::min<std::size_t>(dim, 48);
    std::mt19937_64 rng(0x6F676D);
    std::vector<Amplitude> start(dim);
    for (auto &a : start) {
        a = Amplitude(2 * uniform01(rng) - 1, 2 * uniform01(rng) - 1);
    }
    double best_res = std::numeric_limits<double>::infinity();
    for (std::size_t restart = 0; restart < max_restarts; restart++) {
        double s = std::sqrt(norm2(start));
        for (auto &a : start) {
            a /= s;
        }
        std::vector<std::vector<Amplitude>> basis{start};
        std::vector<double> alpha, beta;
        for (std::size_t k = 0; k < krylov; k++) {
            std::vector<Amplitude> w;
            apply_observable(obs, basis[k], w);
            alpha.push_back(inner(basis[k], w).real());
            for (int pass = 0; pass < 2; pass++) {
                for (const auto &v : basis) {
                    Amplitude c = inner(v, w);
                    for (std::size_t i = 0; i < dim; i++) {
                        w[i] -= c * v[i];
                    }
                }
            }
            double b = std::sqrt(norm2(w));
            if (k + 1 == krylov || b < 1e-13) {
                break;
            }
            beta.push_back(b);
            for (auto &a : w) {
                a /= b;
            }
            basis.push_back(std::move(w));
        }
        std::size_t m = alpha.size();
        Eigen::VectorXd diag(static_cast<Eigen::Index>(m));
        Eigen::VectorXd sub(static_cast<Eigen::Index>(m > 0 ? m - 1 : 0));
        for (std::size_t i = 0; i < m; i++) {
            diag(static_cast<Eigen::Index>(i)) = alpha[i];
            if (i + 1 < m) {
                sub(static_cast<Eigen::Index>(i)) = beta[i];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(diag, sub);
        double theta = tri.eigenvalues()(0);
        std::vector<Amplitude> x(dim, Amplitude(0));
        for (std::size_t i = 0; i < m; i++) {
            double y = tri.eigenvectors()(static_cast<Eigen::Index>(i), 0);
            for (std::size_t d = 0; d < dim; d++) {
                x[d] += y * basis[i][d];
            }
        }
        double nrm = std::sqrt(norm2(x));
        for (auto &a : x) {
            a /= nrm;
        }
        double res = residual_of(x, theta);
        best_res = std::min(best_res, res);
        if (res <= tolerance) {
            return {StateVector(n, std::move(x)), theta, res};
        }
        start = std::move(x);
    }
    throw NumericalError("Lanczos did not converge; best residual " + std::to_string(best_res));
}

int MeasurementRecord::parity(std::uint64_t support) const {
    return (std::popcount(minus_mask & support) & 1) ? -1 : 1;
}

std::vector<double> outcome_distribution(const StateVector &state, const PauliString &basis) {
    auto psi = rotated(state, basis);
    std::vector<double> probs(psi.size());
    kernels::active_kernels().probabilities(psi, probs);
    return probs;
}

std::vector<MeasurementRecord> measure(const StateVector &state, const PauliString &basis,
                                       std::size_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw PreconditionError("measure needs at least one shot");
    }
    auto probs = outcome_distribution(state, basis);
    std::vector<double> cumulative(probs.size());
    double acc = 0;
    for (std::size_t i = 0; i < probs.size(); i++) {
        acc += probs[i];
        cumulative[i] = acc;
    }
    std::mt19937_64 rng(seed);
    std::vector<MeasurementRecord> out;
    out.reserve(shots);
    for (std::size_t t = 0; t < shots; t++) {
        double u = uniform01(rng) * acc;
        auto idx = static_cast<std::size_t>(
            std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
        idx = std::min(idx, probs.size() - 1);
        while (probs[idx] <= 0 && idx > 0) {
            idx--;
        }
        out.push_back({basis, static_cast<std::uint64_t>(idx)});
    }
    return out;
}

std::vector<MeasurementRecord> execute(const StateVector &state, const FixedMeasurementList &list,
                                       std::uint64_t seed) {
    if (list.num_qubits != state.num_qubits()) {
        throw DimensionError("measurement list and state disagree on qubit count");
    }
    std::vector<MeasurementRecord> out;
    out.reserve(list.total_shots());
    for (std::size_t i = 0; i < list.entries.size(); i++) {
        const auto &e = list.entries[i];
        if (e.shots == 0) {
            continue;
        }
        auto shots = measure(state, e.basis, e.shots, derive_seed(seed, i));
        out.insert(out.end(), shots.begin(), shots.end());
    }
    return out;
}

}  // namespace ogm
