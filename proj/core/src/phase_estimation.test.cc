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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace condham {
namespace {

using A = PauliAxis;

// Closed-form readout kernel for an eigenvalue E: with x = 2^m E tau / pi,
// P(k) = |(1/N) sum_l exp(2 pi i l (x - k) / N)|^2.
std::vector<double> kernel(double energy, const PEConfig &cfg) {
    size_t n = cfg.outcomes();
    double x = static_cast<double>(n) * energy * cfg.tau / std::numbers::pi;
    std::vector<double> p(n);
    for (size_t k = 0; k < n; k++) {
        Complex sum = 0;
        for (size_t l = 0; l < n; l++) {
            sum += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(l) * (x - static_cast<double>(k)) /
                                       static_cast<double>(n));
        }
        p[k] = std::norm(sum / static_cast<double>(n));
    }
    return p;
}

QuantumState eigenvector(const EigenDecomposition &eig, size_t i) {
    std::vector<Complex> v(eig.vectors.dim());
    for (size_t r = 0; r < v.size(); r++) {
        v[r] = eig.vectors(r, i);
    }
    return QuantumState(std::move(v));
}

double total_variation(const std::vector<double> &a, const std::vector<double> &b) {
    double tv = 0;
    for (size_t i = 0; i < a.size(); i++) {
        tv += std::abs(a[i] - b[i]);
    }
    return tv / 2;
}

std::vector<double> probabilities(const Distribution &d) {
    std::vector<double> p;
    for (const auto &o : d) {
        p.push_back(o.probability);
    }
    return p;
}

TEST(Config, TauAndResolution) {
    auto cfg = PEConfig::from_delta(5, 2.0);
    EXPECT_DOUBLE_EQ(cfg.tau, std::numbers::pi / 4);
    EXPECT_DOUBLE_EQ(cfg.resolution(), 4.0 / 32);
    EXPECT_THROW(choose_tau(0), std::invalid_argument);
    cfg.m = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Decode, WrapsUpperHalfToNegative) {
    auto cfg = PEConfig::from_delta(3, 1.0);
    EXPECT_DOUBLE_EQ(decode_energy(0, cfg), 0);
    EXPECT_DOUBLE_EQ(decode_energy(1, cfg), 0.25);
    EXPECT_DOUBLE_EQ(decode_energy(7, cfg), -0.25);
    EXPECT_DOUBLE_EQ(decode_energy(4, cfg), -1.0);
    EXPECT_THROW(decode_energy(8, cfg), std::invalid_argument);
}

TEST(RunQpe, EigenstateMatchesKernel) {
    auto h = random_hamiltonian(3, 12, 1.0);
    auto eig = hermitian_eig(to_dense(h));
    auto cfg = PEConfig::from_delta(6, spread_bound(h));
    for (size_t i = 0; i < eig.values.size(); i++) {
        auto got = probabilities(run_qpe(h, eigenvector(eig, i), cfg));
        EXPECT_LT(total_variation(got, kernel(eig.values[i], cfg)), 1e-10);
    }
}

TEST(RunQpe, GridEigenvalueIsDeterministic) {
    // E = 1 with tau = pi/4 lands exactly on readout k = N/4.
    PairHamiltonian h(1);
    h.set_r(0, A::Z, 1.0);
    PEConfig cfg;
    cfg.m = 4;
    cfg.tau = std::numbers::pi / 4;
    auto d = run_qpe(h, QuantumState::basis(2, 0), cfg);
    EXPECT_NEAR(d[4].probability, 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(d[4].energy_estimate, 1.0);
    auto neg = run_qpe(h, QuantumState::basis(2, 1), cfg);
    EXPECT_NEAR(neg[12].probability, 1.0, 1e-12);
}

TEST(RunQpe, NoAliasingWithSpreadBound) {
    for (uint64_t seed = 0; seed < 5; seed++) {
        auto h = random_hamiltonian(3, seed, 1.0);
        auto eig = hermitian_eig(to_dense(h));
        auto cfg = PEConfig::from_delta(7, spread_bound(h));
        for (size_t i : {size_t{0}, eig.values.size() - 1}) {
            auto d = run_qpe(h, eigenvector(eig, i), cfg);
            auto mode = std::max_element(d.begin(), d.end(), [](auto &a, auto &b) {
                return a.probability < b.probability;
            });
            EXPECT_LE(std::abs(mode->energy_estimate - eig.values[i]), cfg.resolution());
        }
    }
}

TEST(TailBound, HoldsForSeveralWidths) {
    auto h = random_hamiltonian(3, 31, 1.0);
    auto eig = hermitian_eig(to_dense(h));
    auto cfg = PEConfig::from_delta(7, spread_bound(h));
    for (int e : {2, 3, 4, 8}) {
        for (size_t i = 0; i < eig.values.size(); i++) {
            auto check = tail_probability_check(h, eigenvector(eig, i), cfg, e);
            EXPECT_LE(check.empirical, check.bound) << "e=" << e;
        }
    }
    EXPECT_DOUBLE_EQ(tail_probability_check(h, eigenvector(eig, 0), cfg, 2).bound, 0.5);
    EXPECT_THROW(tail_probability_check(h, eigenvector(eig, 0), cfg, 1), std::invalid_argument);
}

TEST(PostMeasurement, ProjectsOntoEigenspace) {
    // Eigenvalues on the readout grid make the projection exact.
    PairHamiltonian h(2);
    h.set_r(0, A::Z, 1.0);
    h.set_r(1, A::Z, 0.5);
    PEConfig cfg;
    cfg.m = 5;
    cfg.tau = std::numbers::pi / 4;
    double s = 0.5;
    QuantumState plus({s, s, s, s});
    // E = 1.5 for |00>: k = 32 * 1.5 / 4 = 12.
    auto post = post_measurement_state(h, plus, cfg, 12);
    EXPECT_GT(std::norm(post.amplitudes()[0]), 0.99);
    EXPECT_THROW(post_measurement_state(h, plus, cfg, 13), std::invalid_argument);
}

TEST(DensityOfStates, ExactMatchesKernelMixture) {
    auto h = random_hamiltonian(4, 2024, 1.0);
    auto eig = hermitian_eig(to_dense(h));
    auto cfg = PEConfig::from_delta(6, spread_bound(h));
    auto hist = density_of_states(h, MaximallyMixed{}, cfg, true);
    std::vector<double> oracle(cfg.outcomes());
    for (double e : eig.values) {
        auto kk = kernel(e, cfg);
        for (size_t k = 0; k < kk.size(); k++) {
            oracle[k] += kk[k] / static_cast<double>(eig.values.size());
        }
    }
    std::vector<double> got;
    for (const auto &b : hist.bins) {
        got.push_back(b.probability);
        EXPECT_EQ(b.count, 0u);
    }
    EXPECT_LT(total_variation(got, oracle), 1e-9);
    EXPECT_TRUE(hist.exact);
}

TEST(DensityOfStates, SampledCloseAndReproducible) {
    auto h = random_hamiltonian(3, 99, 1.0);
    auto cfg = PEConfig::from_delta(5, spread_bound(h));
    cfg.shots = 4096;
    cfg.seed = 17;
    auto exact = density_of_states(h, MaximallyMixed{}, cfg, true);
    auto sampled = density_of_states(h, MaximallyMixed{}, cfg, false);
    std::vector<double> a, b;
    uint64_t total = 0;
    double ks = 0, ca = 0, cb = 0;
    for (size_t k = 0; k < exact.bins.size(); k++) {
        a.push_back(exact.bins[k].probability);
        b.push_back(sampled.bins[k].probability);
        total += sampled.bins[k].count;
        ca += a.back();
        cb += b.back();
        ks = std::max(ks, std::abs(ca - cb));
    }
    EXPECT_EQ(total, 4096u);
    EXPECT_LT(total_variation(a, b), 4 / std::sqrt(4096.0));
    EXPECT_LT(ks, 1.63 / std::sqrt(4096.0) * 2);
    EXPECT_EQ(histogram_csv(sampled), histogram_csv(density_of_states(h, MaximallyMixed{}, cfg, false)));
}

TEST(DensityOfStates, ThermalLimits) {
    auto h = random_hamiltonian(3, 4, 1.0);
    auto cfg = PEConfig::from_delta(6, spread_bound(h));
    auto hot = density_of_states(h, Thermal{0.0}, cfg, true);
    auto mixed = density_of_states(h, MaximallyMixed{}, cfg, true);
    for (size_t k = 0; k < hot.bins.size(); k++) {
        EXPECT_NEAR(hot.bins[k].probability, mixed.bins[k].probability, 1e-10);
    }
    auto eig = hermitian_eig(to_dense(h));
    auto cold = density_of_states(h, Thermal{200.0}, cfg, true);
    auto ground = kernel(eig.values.front(), cfg);
    for (size_t k = 0; k < cold.bins.size(); k++) {
        EXPECT_NEAR(cold.bins[k].probability, ground[k], 1e-6);
    }
    EXPECT_THROW(density_of_states(h, Thermal{-1.0}, cfg, true), std::invalid_argument);
}

TEST(GapReport, FindsEngineeredGap) {
    // 0.25 Z0 + Z1 has levels -1.25, -0.75, 0.75, 1.25, all on the readout grid.
    PairHamiltonian h(2);
    h.set_r(0, A::Z, 0.25);
    h.set_r(1, A::Z, 1.0);
    PEConfig cfg;
    cfg.m = 6;
    cfg.tau = std::numbers::pi / 4;
    auto hist = density_of_states(h, MaximallyMixed{}, cfg, true);
    auto gaps = gap_report(hist, 1e-6);
    // Three gaps; the middle one brackets zero.
    ASSERT_EQ(gaps.size(), 3u);
    const auto &mid = gaps[1];
    EXPECT_LT(mid.start_energy, 0.0);
    EXPECT_GT(mid.end_energy, 0.0);
    EXPECT_NEAR(mid.start_energy, -0.75 + cfg.resolution(), 1e-12);
    EXPECT_NEAR(mid.end_energy, 0.75 - cfg.resolution(), 1e-12);
}

TEST(HistogramCsv, Format) {
    PEConfig cfg;
    cfg.m = 1;
    cfg.tau = 1;
    Distribution d = {{0, 0.0, 0.25}, {1, -1.0, 0.75}};
    auto csv = histogram_csv(histogram_from_distribution(d, cfg));
    EXPECT_EQ(csv, "k,count,probability,energy_estimate\n0,0,0.25,0\n1,0,0.75,-1\n");
}

}  // namespace
}  // namespace condham
