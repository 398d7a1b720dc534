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

#ifndef CONDHAM_PHASE_ESTIMATION_H
#define CONDHAM_PHASE_ESTIMATION_H

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "condham/conditional.h"
#include "condham/dense.h"
#include "condham/hamiltonian.h"

namespace condham {

/// tau = pi / (2 delta). Throws std::invalid_argument for delta <= 0.
double choose_tau(double delta);

struct PEConfig {
    /// Ancilla qubits.
    int m = 6;
    double tau = 0;
    /// Bound on lambda_max - lambda_min that tau was derived from.
    double delta = 0;
    EvolutionMode mode = EvolutionMode::Ideal;
    /// Used when mode == PulseLevel.
    ConversionParams conversion;
    uint64_t shots = 1024;
    uint64_t seed = 1;

    /// m ancillas with tau = choose_tau(delta).
    static PEConfig from_delta(int m, double delta);

    size_t outcomes() const {
        return size_t{1} << m;
    }
    /// Energy step between adjacent readouts, pi / (2^m tau).
    double resolution() const;
    /// Throws std::invalid_argument for m outside 1..16 or tau <= 0.
    void validate() const;
};

struct PEOutcome {
    size_t k = 0;
    double energy_estimate = 0;
    double probability = 0;
};

/// Exact readout distribution, indexed by k.
using Distribution = std::vector<PEOutcome>;

/// Readout k mapped back to energy: (pi / tau) * k~ / 2^m with k~ = k for
/// k < 2^(m-1) and k - 2^m otherwise.
double decode_energy(size_t k, const PEConfig &cfg);

/// Hadamards on the ancillas, exp(-i H (x) s_z^(j) 2^j tau) for ancilla j = 0..m-1
/// (ancilla j is bit j of the readout), inverse Fourier transform, then the
/// exact probability of every readout.
Distribution run_qpe(const PairHamiltonian &h, const QuantumState &initial, const PEConfig &cfg);
Distribution run_qpe(const PairHamiltonian &h, const DensityMatrix &initial, const PEConfig &cfg);

/// Normalized system state after reading out k. Throws if k has probability below 1e-20.
QuantumState post_measurement_state(const PairHamiltonian &h, const QuantumState &initial, const PEConfig &cfg,
                                    size_t k);

struct HistogramBin {
    size_t k = 0;
    uint64_t count = 0;
    double probability = 0;
    double energy_estimate = 0;
};

/// One row per readout k. For exact (unsampled) histograms shots is 0 and
/// every count is 0; probability holds the exact value.
struct Histogram {
    std::vector<HistogramBin> bins;
    PEConfig config;
    uint64_t shots = 0;
    bool exact = false;
};

Histogram histogram_from_distribution(const Distribution &dist, const PEConfig &cfg);

/// Draws cfg.shots readouts from `dist`. Shot s uses its own seeded substream,
/// so results do not depend on the thread count.
Histogram sample_distribution(const Distribution &dist, const PEConfig &cfg);

Histogram sample_qpe(const PairHamiltonian &h, const QuantumState &initial, const PEConfig &cfg);
Histogram sample_qpe(const PairHamiltonian &h, const DensityMatrix &initial, const PEConfig &cfg);

struct TailCheck {
    double empirical = 0;
    double bound = 0;
};

/// Probability that the readout lies more than e steps (circular distance on
/// the 2^m ring) from 2^m E tau / pi, against the bound 1 / (2e - 2). E is the
/// expectation of H in `eigenstate`. Throws for e < 2.
TailCheck tail_probability_check(const PairHamiltonian &h, const QuantumState &eigenstate, const PEConfig &cfg,
                                 int e);

struct MaximallyMixed {};
struct Thermal {
    double beta = 0;
};
using Preparation = std::variant<MaximallyMixed, Thermal>;

/// Readout statistics for a mixed target register. The thermal weights come
/// from an exact diagonalization of H. With `exact` the histogram carries the
/// exact distribution, otherwise cfg.shots seeded samples.
Histogram density_of_states(const PairHamiltonian &h, const Preparation &prep, const PEConfig &cfg, bool exact);

struct Gap {
    double start_energy = 0;
    double end_energy = 0;
};

/// Maximal runs of readouts (ordered by decoded energy) whose probability is
/// below `threshold`, restricted to the range between the first and last
/// occupied readout. Energies are those of the first and last empty bin.
std::vector<Gap> gap_report(const Histogram &hist, double threshold);

/// `k,count,probability,energy_estimate` with every k listed.
std::string histogram_csv(const Histogram &hist);

}  // namespace condham

#endif
