// Copyright 2026 The condham Authors
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

#include "condham/phase_estimation.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "condham/parallel.h"
#include "condham/random.h"

namespace condham {

double choose_tau(double delta) {
    if (!(delta > 0) || !std::isfinite(delta)) {
        throw std::invalid_argument("choose_tau needs a positive spectral spread bound");
    }
    return std::numbers::pi / (2 * delta);
}

PEConfig PEConfig::from_delta(int m, double delta) {
    PEConfig cfg;
    cfg.m = m;
    cfg.delta = delta;
    cfg.tau = choose_tau(delta);
    return cfg;
}

double PEConfig::resolution() const {
    return std::numbers::pi / (static_cast<double>(outcomes()) * tau);
}

void PEConfig::validate() const {
    if (m < 1 || m > 16) {
        throw std::invalid_argument("ancilla count m must be in 1..16, got " + std::to_string(m));
    }
    if (!(tau > 0) || !std::isfinite(tau)) {
        throw std::invalid_argument("tau must be positive");
    }
    if (mode == EvolutionMode::PulseLevel) {
        conversion.validate();
    }
}

double decode_energy(size_t k, const PEConfig &cfg) {
    size_t n = cfg.outcomes();
    if (k >= n) {
        throw std::invalid_argument("readout " + std::to_string(k) + " out of range");
    }
    double wrapped = k < n / 2 ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(n);
    return (std::numbers::pi / cfg.tau) * wrapped / static_cast<double>(n);
}

namespace {

// System blocks of the controlled evolution for each ancilla: index 0 for
// ancilla value 0 (s_z = +1), index 1 for value 1.
using ControlledStage = std::vector<std::array<DenseOperator, 2>>;

ControlledStage build_stage(const PairHamiltonian &h, const PEConfig &cfg) {
    cfg.validate();
    ControlledStage stage;
    if (cfg.mode == EvolutionMode::Ideal) {
        auto eig = hermitian_eig(to_dense(h));
        for (int j = 0; j < cfg.m; j++) {
            double t = std::ldexp(cfg.tau, j);
            stage.push_back({expm_i(eig, t), expm_i(eig, -t)});
        }
        return stage;
    }
    DenseOperator u = conditional_evolution(h, cfg.tau, cfg.conversion);
    for (int j = 0; j < cfg.m; j++) {
        stage.push_back({ancilla_block(u, 0), ancilla_block(u, 1)});
        u = u * u;
    }
    return stage;
}

// Unnormalized system vectors a_k = (1/2^m) sum_l e^{-2 pi i k l / 2^m} phi_l, one per readout.
std::vector<std::vector<Complex>> readout_amplitudes(const ControlledStage &stage, std::span<const Complex> psi) {
    size_t m = stage.size();
    size_t n_out = size_t{1} << m;
    size_t dim = psi.size();
    if (!stage.empty() && stage.front()[0].dim() != dim) {
        throw std::invalid_argument("initial state dimension does not match the Hamiltonian");
    }
    std::vector<std::vector<Complex>> phi(n_out);
    phi[0].assign(psi.begin(), psi.end());
    for (size_t j = 0; j < m; j++) {
        size_t half = size_t{1} << j;
        for (size_t l = 0; l < half; l++) {
            phi[l + half] = stage[j][1] * std::span<const Complex>(phi[l]);
            phi[l] = stage[j][0] * std::span<const Complex>(phi[l]);
        }
    }
    std::vector<Complex> twiddle(n_out);
    for (size_t i = 0; i < n_out; i++) {
        twiddle[i] = std::polar(1.0, -2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_out));
    }
    std::vector<std::vector<Complex>> out(n_out, std::vector<Complex>(dim));
    double scale = 1.0 / static_cast<double>(n_out);
    for (size_t k = 0; k < n_out; k++) {
        auto &a = out[k];
        for (size_t l = 0; l < n_out; l++) {
            Complex w = twiddle[(k * l) % n_out] * scale;
            const auto &p = phi[l];
            for (size_t d = 0; d < dim; d++) {
                a[d] += w * p[d];
            }
        }
    }
    return out;
}

std::vector<double> readout_probabilities(const ControlledStage &stage, std::span<const Complex> psi) {
    auto amps = readout_amplitudes(stage, psi);
    std::vector<double> probs(amps.size());
    for (size_t k = 0; k < amps.size(); k++) {
        double total = 0;
        for (const auto &a : amps[k]) {
            total += std::norm(a);
        }
        probs[k] = total;
    }
    return probs;
}

Distribution to_distribution(const std::vector<double> &probs, const PEConfig &cfg) {
    Distribution dist(probs.size());
    for (size_t k = 0; k < probs.size(); k++) {
        dist[k] = PEOutcome{k, decode_energy(k, cfg), probs[k]};
    }
    return dist;
}

Distribution run_mixture(const PairHamiltonian &h, const std::vector<std::pair<double, QuantumState>> &mixture,
                         const PEConfig &cfg) {
    ControlledStage stage = build_stage(h, cfg);
    std::vector<std::vector<double>> per_component(mixture.size());
    parallel_for(mixture.size(), [&](size_t i) {
        per_component[i] = readout_probabilities(stage, mixture[i].second.amplitudes());
    });
    std::vector<double> probs(cfg.outcomes());
    for (size_t i = 0; i < mixture.size(); i++) {
        for (size_t k = 0; k < probs.size(); k++) {
            probs[k] += mixture[i].first * per_component[i][k];
        }
    }
    return to_distribution(probs, cfg);
}

void check_dimension(const PairHamiltonian &h, size_t dim) {
    if (dim != (size_t{1} << h.num_qubits())) {
        throw std::invalid_argument("initial state dimension " + std::to_string(dim) + " does not match a " +
                                    std::to_string(h.num_qubits()) + "-qubit Hamiltonian");
    }
}

}  // namespace

Distribution run_qpe(const PairHamiltonian &h, const QuantumState &initial, const PEConfig &cfg) {
    check_dimension(h, initial.dim());
    ControlledStage stage = build_stage(h, cfg);
    return to_distribution(readout_probabilities(stage, initial.amplitudes()), cfg);
}

Distribution run_qpe(const PairHamiltonian &h, const DensityMatrix &initial, const PEConfig &cfg) {
    check_dimension(h, initial.dim());
    return run_mixture(h, initial.mixture(), cfg);
}

QuantumState post_measurement_state(const PairHamiltonian &h, const QuantumState &initial, const PEConfig &cfg,
                                    size_t k) {
    check_dimension(h, initial.dim());
    if (k >= cfg.outcomes()) {
        throw std::invalid_argument("readout out of range");
    }
    auto amps = readout_amplitudes(build_stage(h, cfg), initial.amplitudes());
    std::vector<Complex> state = amps[k];
    double norm2 = 0;
    for (const auto &a : state) {
        norm2 += std::norm(a);
    }
    if (norm2 <= 1e-20) {
        throw std::invalid_argument("readout has zero probability");
    }
    for (auto &a : state) {
        a /= std::sqrt(norm2);
    }
    return QuantumState(std::move(state));
}

Histogram histogram_from_distribution(const Distribution &dist, const PEConfig &cfg) {
    Histogram hist;
    hist.config = cfg;
    hist.exact = true;
    for (const auto &o : dist) {
        hist.bins.push_back({o.k, 0, o.probability, o.energy_estimate});
    }
    return hist;
}

Histogram sample_distribution(const Distribution &dist, const PEConfig &cfg) {
    if (cfg.shots < 1) {
        throw std::invalid_argument("sampling needs at least one shot");
    }
    std::vector<double> cdf(dist.size());
    double running = 0;
    for (size_t k = 0; k < dist.size(); k++) {
        running += dist[k].probability;
        cdf[k] = running;
    }
    std::vector<size_t> draws(cfg.shots);
    parallel_for(cfg.shots, [&](size_t shot) {
        auto engine = substream(cfg.seed, shot);
        double u = unit_double(engine()) * running;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        draws[shot] = std::min<size_t>(static_cast<size_t>(it - cdf.begin()), cdf.size() - 1);
    });
    Histogram hist;
    hist.config = cfg;
    hist.shots = cfg.shots;
    hist.exact = false;
    for (const auto &o : dist) {
        hist.bins.push_back({o.k, 0, 0.0, o.energy_estimate});
    }
    for (size_t k : draws) {
        hist.bins[k].count++;
    }
    for (auto &b : hist.bins) {
        b.probability = static_cast<double>(b.count) / static_cast<double>(cfg.shots);
    }
    return hist;
}

Histogram sample_qpe(const PairHamiltonian &h, const QuantumState &initial, const PEConfig &cfg) {
    return sample_distribution(run_qpe(h, initial, cfg), cfg);
}

Histogram sample_qpe(const PairHamiltonian &h, const DensityMatrix &initial, const PEConfig &cfg) {
    return sample_distribution(run_qpe(h, initial, cfg), cfg);
}

TailCheck tail_probability_check(const PairHamiltonian &h, const QuantumState &eigenstate, const PEConfig &cfg,
                                 int e) {
    if (e < 2) {
        throw std::invalid_argument("tail bound 1/(2e-2) needs e >= 2");
    }
    auto hv = to_dense(h) * eigenstate.amplitudes();
    Complex energy = 0;
    auto psi = eigenstate.amplitudes();
    for (size_t i = 0; i < psi.size(); i++) {
        energy += std::conj(psi[i]) * hv[i];
    }
    Distribution dist = run_qpe(h, eigenstate, cfg);
    double n = static_cast<double>(cfg.outcomes());
    double center = n * energy.real() * cfg.tau / std::numbers::pi;
    TailCheck check;
    check.bound = 1.0 / (2.0 * e - 2.0);
    for (const auto &o : dist) {
        double d = std::fmod(std::abs(static_cast<double>(o.k) - center), n);
        d = std::min(d, n - d);
        if (d > e) {
            check.empirical += o.probability;
        }
    }
    return check;
}

Histogram density_of_states(const PairHamiltonian &h, const Preparation &prep, const PEConfig &cfg, bool exact) {
    size_t dim = size_t{1} << h.num_qubits();
    std::vector<std::pair<double, QuantumState>> mixture;
    if (std::holds_alternative<MaximallyMixed>(prep)) {
        for (size_t i = 0; i < dim; i++) {
            mixture.emplace_back(1.0 / static_cast<double>(dim), QuantumState::basis(dim, i));
        }
    } else {
        double beta = std::get<Thermal>(prep).beta;
        if (!(beta >= 0)) {
            throw std::invalid_argument("thermal preparation needs beta >= 0");
        }
        auto eig = hermitian_eig(to_dense(h));
        double ground = eig.values.front();
        std::vector<double> weights(dim);
        double z = 0;
        for (size_t i = 0; i < dim; i++) {
            weights[i] = std::exp(-beta * (eig.values[i] - ground));
            z += weights[i];
        }
        for (size_t i = 0; i < dim; i++) {
            if (weights[i] / z <= 1e-300) {
                continue;
            }
            std::vector<Complex> amps(dim);
            for (size_t r = 0; r < dim; r++) {
                amps[r] = eig.vectors(r, i);
            }
            mixture.emplace_back(weights[i] / z, QuantumState(std::move(amps)));
        }
    }
    Distribution dist = run_mixture(h, mixture, cfg);
    return exact ? histogram_from_distribution(dist, cfg) : sample_distribution(dist, cfg);
}

std::vector<Gap> gap_report(const Histogram &hist, double threshold) {
    size_t n = hist.bins.size();
    // Readouts in order of decoded energy: k~ = -n/2 .. n/2 - 1.
    std::vector<const HistogramBin *> ordered(n);
    for (size_t i = 0; i < n; i++) {
        ordered[i] = &hist.bins[(i + n / 2) % n];
    }
    auto occupied = [&](size_t i) { return ordered[i]->probability >= threshold; };
    size_t first = n;
    size_t last = 0;
    for (size_t i = 0; i < n; i++) {
        if (occupied(i)) {
            first = std::min(first, i);
            last = i;
        }
    }
    std::vector<Gap> gaps;
    if (first >= last) {
        return gaps;
    }
    size_t i = first;
    while (i <= last) {
        if (occupied(i)) {
            i++;
            continue;
        }
        size_t start = i;
        while (i <= last && !occupied(i)) {
            i++;
        }
        gaps.push_back({ordered[start]->energy_estimate, ordered[i - 1]->energy_estimate});
    }
    return gaps;
}

std::string histogram_csv(const Histogram &hist) {
    std::string out = "k,count,probability,energy_estimate\n";
    char buf[128];
    for (const auto &b : hist.bins) {
        std::snprintf(buf, sizeof(buf), "%zu,%llu,%.17g,%.17g\n", b.k, static_cast<unsigned long long>(b.count),
                      b.probability, b.energy_estimate);
        out += buf;
    }
    return out;
}

}  // namespace condham
