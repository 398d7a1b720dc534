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

#ifndef CONDHAM_PULSE_H
#define CONDHAM_PULSE_H

#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "condham/dense.h"
#include "condham/hamiltonian.h"
#include "condham/pauli.h"

namespace condham {

/// The system's own (unknown) Hamiltonian.
struct SystemGenerator {
    bool operator==(const SystemGenerator &) const = default;
};

/// sign * s_axis^qubit (x) s_z on the ancilla, switched on deliberately.
struct EngineeredCoupling {
    size_t qubit = 0;
    PauliAxis axis = PauliAxis::X;
    int sign = +1;
    bool operator==(const EngineeredCoupling &) const = default;
};

struct IdleGenerator {
    bool operator==(const IdleGenerator &) const = default;
};

using Generator = std::variant<SystemGenerator, EngineeredCoupling, IdleGenerator>;

/// One conjugated evolution: frame * exp(-i G duration) * frame^dagger, with
/// the frame applied as an instantaneous perfect unitary on the system qubits.
struct Segment {
    PauliString frame;
    double duration = 0;
    Generator generator = SystemGenerator{};
    bool operator==(const Segment &) const = default;
};

class PulseSchedule {
   public:
    PulseSchedule(size_t num_qubits, bool has_ancilla);

    /// Throws std::invalid_argument for negative durations, frames of the wrong
    /// size, or engineered couplings on schedules without an ancilla.
    void append(Segment segment);

    size_t num_qubits() const {
        return n_;
    }
    bool has_ancilla() const {
        return has_ancilla_;
    }
    const std::vector<Segment> &segments() const {
        return segments_;
    }
    double total_time() const;
    bool system_only() const;

    bool operator==(const PulseSchedule &) const = default;

   private:
    size_t n_;
    bool has_ancilla_;
    std::vector<Segment> segments_;
};

/// Strength-2 orthogonal array over {1, x, y, z}: one symbol row per qubit.
struct OrthogonalArray {
    std::vector<std::vector<PauliAxis>> rows;

    size_t length() const {
        return rows.empty() ? 0 : rows.front().size();
    }
    /// Exhaustive check that every ordered symbol pair appears length/16 times
    /// in every pair of rows.
    bool is_strength2_balanced() const;
};

/// Linear construction over GF(4): columns are the vectors of GF(4)^s with s
/// minimal such that (4^s - 1)/3 >= q, rows are the nonzero linear functionals
/// normalized to a leading 1, symbols map 0,1,w,w^2 -> 1,x,y,z.
/// Throws std::invalid_argument for q = 0 or q > 85.
OrthogonalArray build_orthogonal_array(size_t q);

/// Frames the qubits in `decoupled` with the orthogonal array columns so every
/// term touching them averages to zero. An empty set gives a single segment.
PulseSchedule decoupling_schedule(size_t num_qubits, const std::set<size_t> &decoupled, double total_time);

/// Four equal periods framed by 1, s_alpha^j, s_beta^k, s_alpha^j s_beta^k.
PulseSchedule four_frame_schedule(size_t num_qubits, size_t j, size_t k, PauliAxis alpha, PauliAxis beta,
                                  double total_time);

/// Decoupling of every qubit except j, k nested with the four-frame selection:
/// the average keeps only r^j_alpha, r^k_beta and J_{j,k,alpha,beta}.
PulseSchedule isolate_pair_schedule(size_t num_qubits, size_t j, size_t k, PauliAxis alpha,
                                    PauliAxis beta, double total_time);

/// Two halves, plain and framed by s_{alpha+1}^j s_{beta+1}^k, cancelling the
/// single-qubit parts of an isolated term.
PulseSchedule cancel_one_qubit_schedule(size_t num_qubits, size_t j, size_t k, PauliAxis alpha,
                                        PauliAxis beta, double total_time);

/// Fraction of the interval spent in the s_alpha^j s_beta^k frame so that the
/// single-qubit share becomes one_qubit_scale(Rescaled). Throws when that share
/// exceeds 1 (the literal factor at n = 2).
double rescale_flip_fraction(size_t num_qubits, WeightConvention convention);

/// Flipped-frame interval of length f*delta followed by a plain interval.
PulseSchedule rescale_schedule(size_t num_qubits, size_t j, size_t k, PauliAxis alpha, PauliAxis beta,
                               double delta, WeightConvention convention = WeightConvention::Corrected);

/// 3p equal intervals covering [0, 3T], framed cyclically (index mod 3) by
/// s_{alpha+1}^j, s_{beta+1}^k and their product. Each frame flips two of the
/// three coefficients of an isolated term, so the average is -1/3 of it and
/// the 3T wall-clock run inverts T of forward evolution.
PulseSchedule inversion_schedule(size_t num_qubits, size_t j, size_t k, PauliAxis alpha, PauliAxis beta,
                                 double total_time, int p);

/// Runs `inner` inside every segment of `outer`: frames multiply, durations
/// scale by the outer segment length. Both must be system-only.
PulseSchedule nest(const PulseSchedule &outer, const PulseSchedule &inner);

/// First-order average sum_i (d_i / T) conjugate(H, frame_i). Segments of equal
/// duration are combined with integer sign counts so cancellations are exact.
PairHamiltonian symbolic_average(const PulseSchedule &schedule, const PairHamiltonian &h);

/// Ordered product of the conjugated evolutions, the whole schedule repeated
/// `cycles` times with durations divided by `cycles`. Acts on 2^n, or 2^(n+1)
/// with the ancilla as the least significant qubit.
DenseOperator simulate_schedule(const PulseSchedule &schedule, const PairHamiltonian &h, int cycles);

/// Line format: `<duration> <frame> <generator>` per segment, preceded by a
/// `# schedule n=<n> ancilla=<0|1>` header.
std::string format_schedule(const PulseSchedule &schedule);
PulseSchedule parse_schedule(std::string_view text);

}  // namespace condham

#endif
