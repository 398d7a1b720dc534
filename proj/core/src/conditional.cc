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

#include "condham/conditional.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "condham/pulse.h"

namespace condham {

DenseOperator AxisCycleGate::embedded(size_t total_qubits) const {
    if (qubit >= total_qubits) {
        throw std::invalid_argument("axis cycle gate qubit outside register");
    }
    DenseOperator left = DenseOperator::identity(size_t{1} << qubit);
    DenseOperator right = DenseOperator::identity(size_t{1} << (total_qubits - qubit - 1));
    return kron(kron(left, matrix), right);
}

namespace {

bool cycles_axes(const DenseOperator &u) {
    for (auto a : kAxes) {
        DenseOperator rotated = u * pauli_matrix(a) * u.adjoint();
        if (max_abs_entry(rotated - pauli_matrix(successor(a))) > 1e-12) {
            return false;
        }
    }
    return true;
}

}  // namespace

AxisCycleGate axis_cycle_gate(size_t qubit) {
    static const DenseOperator matrix = [] {
        DenseOperator n_dot_sigma = pauli_matrix(PauliAxis::X) + pauli_matrix(PauliAxis::Y) + pauli_matrix(PauliAxis::Z);
        DenseOperator u = expm_i(n_dot_sigma, std::numbers::pi / 3 / std::sqrt(3.0));
        if (cycles_axes(u)) {
            return u;
        }
        if (cycles_axes(u.adjoint())) {
            return u.adjoint();
        }
        throw std::logic_error("axis cycle gate failed its x->y->z self-check");
    }();
    return AxisCycleGate{qubit, matrix};
}

void ConversionParams::validate() const {
    if (!(epsilon > 0) || !std::isfinite(epsilon)) {
        throw std::invalid_argument("epsilon must be positive");
    }
    if (p < 1) {
        throw std::invalid_argument("inversion slice count p must be >= 1");
    }
    if (slices < 1) {
        throw std::invalid_argument("slices must be >= 1");
    }
}

std::string StepConvention::describe() const {
    return std::string("sandwich=") + (sandwich_with_adjoint ? "u^dagger X u" : "u X u^dagger") +
           " coupling_sign=" + (coupling_sign > 0 ? "+1" : "-1") + " prefactor=" + std::to_string(prefactor);
}

namespace {

DenseOperator with_ancilla(const DenseOperator &system) {
    return kron(system, DenseOperator::identity(2));
}

// s_gamma^q (x) s_z with the ancilla as qubit n.
DenseOperator engineered_coupling(size_t n, size_t q, PauliAxis gamma) {
    return embed(PauliString::pair(n + 1, q, gamma, n, PauliAxis::Z), n + 1);
}

DenseOperator sandwich_gate(size_t n, size_t q, const StepConvention &convention) {
    DenseOperator u = axis_cycle_gate(q).embedded(n + 1);
    return convention.sandwich_with_adjoint ? u.adjoint() : u;
}

IsolatedTerm rescaled_term(const PairHamiltonian &h, size_t j, size_t k, PauliAxis alpha, PauliAxis beta,
                           WeightConvention weights) {
    double scale = one_qubit_scale(TermStage::Rescaled, h.num_qubits(), weights);
    return isolated_term(h, j, k, alpha, beta, scale);
}

IsolatedTerm halved_term(const PairHamiltonian &h, size_t j, size_t k, PauliAxis alpha, PauliAxis beta,
                         WeightConvention weights) {
    double scale = one_qubit_scale(TermStage::Halved, h.num_qubits(), weights);
    return isolated_term(h, j, k, alpha, beta, scale);
}

}  // namespace

IdentityCheck check_commutator_identity(const PairHamiltonian &h, size_t j, size_t k, PauliAxis alpha,
                                        PauliAxis beta, WeightConvention weights, const StepConvention &convention) {
    size_t n = h.num_qubits();
    DenseOperator rescaled = with_ancilla(to_dense(rescaled_term(h, j, k, alpha, beta, weights), n));
    DenseOperator lhs(size_t{1} << (n + 1));
    const Complex i_unit(0, 1);
    for (auto [q, axis] : {std::pair{j, alpha}, std::pair{k, beta}}) {
        DenseOperator coupling = Complex(convention.coupling_sign) * engineered_coupling(n, q, successor(axis));
        DenseOperator w = sandwich_gate(n, q, convention);
        lhs += w * (i_unit * commutator(rescaled, coupling)) * w.adjoint();
    }
    DenseOperator target = kron(to_dense(halved_term(h, j, k, alpha, beta, weights), n), pauli_matrix(PauliAxis::Z));

    IdentityCheck check;
    double target_norm2 = 0;
    Complex overlap = 0;
    auto t = target.entries();
    auto l = lhs.entries();
    for (size_t i = 0; i < t.size(); i++) {
        target_norm2 += std::norm(t[i]);
        overlap += std::conj(t[i]) * l[i];
    }
    check.prefactor = target_norm2 > 0 ? overlap.real() / target_norm2 : 0;
    check.residual = spectral_norm(lhs - Complex(check.prefactor) * target);
    check.residual_at_two = spectral_norm(lhs - Complex(2.0) * target);
    return check;
}

StepConvention resolve_step_convention() {
    PairHamiltonian probe = random_hamiltonian(3, 20240601, 1.0);
    const PauliAxis alpha = PauliAxis::X;
    const PauliAxis beta = PauliAxis::Z;
    for (bool adjoint : {false, true}) {
        for (int sign : {1, -1}) {
            StepConvention candidate{adjoint, sign, 0};
            IdentityCheck check =
                check_commutator_identity(probe, 0, 1, alpha, beta, WeightConvention::Corrected, candidate);
            if (check.residual < 1e-9 && check.prefactor > 0) {
                candidate.prefactor = check.prefactor;
                return candidate;
            }
        }
    }
    throw std::logic_error("no step convention satisfies the commutator identity");
}

const StepConvention &step_convention() {
    static const StepConvention resolved = resolve_step_convention();
    return resolved;
}

namespace {

// Forward and inverted evolutions of the rescaled pair term on the system
// register (n qubits).
struct IsolatedEvolutions {
    DenseOperator forward;
    DenseOperator inverted;
};

IsolatedEvolutions isolated_evolutions(const PairHamiltonian &h, size_t j, size_t k, PauliAxis alpha,
                                       PauliAxis beta, const ConversionParams &params) {
    size_t n = h.num_qubits();
    double eps = params.epsilon;
    if (params.mode == EvolutionMode::Ideal) {
        auto eig = hermitian_eig(to_dense(rescaled_term(h, j, k, alpha, beta, params.weights), n));
        return {expm_i(eig, eps), expm_i(eig, -eps)};
    }
    PulseSchedule select = nest(isolate_pair_schedule(n, j, k, alpha, beta, eps),
                                rescale_schedule(n, j, k, alpha, beta, eps, params.weights));
    PulseSchedule invert = nest(inversion_schedule(n, j, k, alpha, beta, eps, params.p), select);
    return {simulate_schedule(select, h, params.slices), simulate_schedule(invert, h, params.slices)};
}

DenseOperator conditional_step(const PairHamiltonian &h, size_t j, size_t k, PauliAxis alpha, PauliAxis beta,
                               const ConversionParams &params, const StepConvention &convention) {
    size_t n = h.num_qubits();
    IsolatedEvolutions iso = isolated_evolutions(h, j, k, alpha, beta, params);
    DenseOperator forward = with_ancilla(iso.forward);
    DenseOperator inverted = with_ancilla(iso.inverted);
    double eps = params.epsilon;

    DenseOperator result = DenseOperator::identity(size_t{1} << (n + 1));
    for (auto [q, axis] : {std::pair{j, alpha}, std::pair{k, beta}}) {
        PulseSchedule on(n, true);
        PulseSchedule off(n, true);
        on.append({PauliString(n), eps, EngineeredCoupling{q, successor(axis), convention.coupling_sign}});
        off.append({PauliString(n), eps, EngineeredCoupling{q, successor(axis), -convention.coupling_sign}});
        DenseOperator w = sandwich_gate(n, q, convention);
        // Time order: W^dagger, forward, coupling on, inverted, coupling off, W.
        DenseOperator half = w * simulate_schedule(off, h, 1) * inverted * simulate_schedule(on, h, 1) * forward *
                             w.adjoint();
        result = half * result;
    }
    return result;
}

void validate_pair(const PairHamiltonian &h, size_t j, size_t k, PauliAxis alpha, PauliAxis beta) {
    if (j == k || j >= h.num_qubits() || k >= h.num_qubits()) {
        throw std::invalid_argument("pair step needs two distinct qubits inside the register");
    }
    if (alpha == PauliAxis::I || beta == PauliAxis::I) {
        throw std::invalid_argument("pair step axes must be x, y or z");
    }
}

DenseOperator power(DenseOperator base, size_t exponent) {
    DenseOperator result = DenseOperator::identity(base.dim());
    while (exponent > 0) {
        if (exponent & 1) {
            result = base * result;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

}  // namespace

DenseOperator pair_conditional_step(const PairHamiltonian &h, size_t j, size_t k, PauliAxis alpha,
                                    PauliAxis beta, const ConversionParams &params) {
    params.validate();
    validate_pair(h, j, k, alpha, beta);
    return conditional_step(h, j, k, alpha, beta, params, step_convention());
}

DenseOperator pair_step_target(const PairHamiltonian &h, size_t j, size_t k, PauliAxis alpha, PauliAxis beta,
                               const ConversionParams &params) {
    validate_pair(h, j, k, alpha, beta);
    size_t n = h.num_qubits();
    DenseOperator generator =
        kron(to_dense(halved_term(h, j, k, alpha, beta, params.weights), n), pauli_matrix(PauliAxis::Z));
    return expm_i(generator, step_convention().prefactor * params.epsilon * params.epsilon);
}

double sweep_time(const ConversionParams &params) {
    return step_convention().prefactor * params.epsilon * params.epsilon;
}

namespace {

DenseOperator sweep(const PairHamiltonian &h, const ConversionParams &params) {
    size_t n = h.num_qubits();
    DenseOperator result = DenseOperator::identity(size_t{1} << (n + 1));
    for (const auto &idx : pair_indices(n)) {
        if (params.skip_zero_terms) {
            IsolatedTerm t = IsolatedTerm::read_from(h, idx.j, idx.k, idx.alpha, idx.beta);
            if (t.a == 0 && t.b == 0 && t.c == 0) {
                continue;
            }
        }
        result = conditional_step(h, idx.j, idx.k, idx.alpha, idx.beta, params, step_convention()) * result;
    }
    return result;
}

}  // namespace

DenseOperator conditional_evolution(const PairHamiltonian &h, double t, const ConversionParams &params) {
    params.validate();
    if (!(t > 0)) {
        throw std::invalid_argument("conditional_evolution needs t > 0");
    }
    size_t n = h.num_qubits();
    if (n < 2) {
        // No pairs: a single qubit term has no partner to build a commutator with.
        throw std::invalid_argument("conditional_evolution needs at least 2 system qubits");
    }
    double per_sweep = sweep_time(params);
    auto full = static_cast<size_t>(std::floor(t / per_sweep));
    double remainder = t - static_cast<double>(full) * per_sweep;
    if (remainder < 1e-12 * t) {
        remainder = 0;
    }
    DenseOperator result = power(sweep(h, params), full);
    if (remainder > 0) {
        ConversionParams trimmed = params;
        trimmed.epsilon = std::sqrt(remainder / step_convention().prefactor);
        result = sweep(h, trimmed) * result;
    }
    return result;
}

DenseOperator ideal_conditional(const PairHamiltonian &h, double t) {
    return expm_i(kron(to_dense(h), pauli_matrix(PauliAxis::Z)), t);
}

DenseOperator ancilla_block(const DenseOperator &u, int bit, double tol) {
    if (u.dim() < 2 || u.dim() % 2 != 0) {
        throw std::invalid_argument("ancilla_block: operator has no ancilla qubit");
    }
    size_t half = u.dim() / 2;
    DenseOperator block(half);
    for (size_t r = 0; r < u.dim(); r++) {
        for (size_t c = 0; c < u.dim(); c++) {
            if ((r & 1) != (c & 1)) {
                if (std::abs(u(r, c)) > tol) {
                    throw std::invalid_argument("ancilla_block: operator mixes ancilla values");
                }
                continue;
            }
            if (static_cast<int>(r & 1) == bit) {
                block(r >> 1, c >> 1) = u(r, c);
            }
        }
    }
    return block;
}

}  // namespace condham
