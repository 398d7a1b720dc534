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

#include <gtest/gtest.h>

#include <cmath>

namespace condham {
namespace {

using A = PauliAxis;

TEST(AxisCycleGate, CyclesAxes) {
    auto u = axis_cycle_gate(0).matrix;
    EXPECT_TRUE(is_unitary(u));
    for (A a : kAxes) {
        auto rotated = u * pauli_matrix(a) * u.adjoint();
        EXPECT_LT(frobenius_norm(rotated - pauli_matrix(successor(a))), 1e-12);
    }
    auto g = axis_cycle_gate(1);
    EXPECT_EQ(g.embedded(3), kron(kron(DenseOperator::identity(2), g.matrix), DenseOperator::identity(2)));
}

TEST(ConversionParams, Validation) {
    ConversionParams p;
    EXPECT_NO_THROW(p.validate());
    p.epsilon = 0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = ConversionParams{};
    p.p = 0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = ConversionParams{};
    p.slices = 0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(StepConvention, Resolved) {
    const auto &c = step_convention();
    EXPECT_FALSE(c.sandwich_with_adjoint);
    EXPECT_EQ(c.coupling_sign, -1);
    EXPECT_NEAR(c.prefactor, 4.0, 1e-9);
    EXPECT_FALSE(c.describe().empty());
}

TEST(CommutatorIdentity, HoldsForEveryPairTerm) {
    auto h = random_hamiltonian(3, 5, 1.0);
    const auto &c = step_convention();
    for (const auto &idx : pair_indices(3)) {
        auto check = check_commutator_identity(h, idx.j, idx.k, idx.alpha, idx.beta, WeightConvention::Corrected, c);
        EXPECT_LT(check.residual, 1e-9);
        EXPECT_NEAR(check.prefactor, c.prefactor, 1e-9);
    }
}

TEST(PairStep, ErrorScalesAsEpsilonCubed) {
    auto h = random_hamiltonian(3, 7, 1.0);
    std::vector<double> errors;
    for (double eps : {0.08, 0.04, 0.02}) {
        ConversionParams p;
        p.epsilon = eps;
        auto step = pair_conditional_step(h, 0, 1, A::X, A::Z, p);
        errors.push_back(spectral_norm(step - pair_step_target(h, 0, 1, A::X, A::Z, p)));
    }
    double slope = std::log(errors.front() / errors.back()) / std::log(4.0);
    EXPECT_GT(slope, 2.5);
    EXPECT_LT(slope, 3.5);
}

TEST(PairStep, PulseLevelApproachesIdealWithSlices) {
    auto h = random_hamiltonian(3, 7, 1.0);
    ConversionParams p;
    p.epsilon = 0.04;
    auto ideal = pair_conditional_step(h, 0, 1, A::X, A::Z, p);
    p.mode = EvolutionMode::PulseLevel;
    double previous = INFINITY;
    for (int slices : {1, 4, 16}) {
        p.slices = slices;
        auto pulse = pair_conditional_step(h, 0, 1, A::X, A::Z, p);
        EXPECT_TRUE(is_unitary(pulse));
        double dist = spectral_norm(pulse - ideal);
        EXPECT_LT(dist, previous);
        previous = dist;
    }
}

TEST(ConditionalEvolution, BlockDiagonalAndUnitary) {
    auto h = random_hamiltonian(2, 3, 1.0);
    for (auto mode : {EvolutionMode::Ideal, EvolutionMode::PulseLevel}) {
        ConversionParams p;
        p.mode = mode;
        p.epsilon = 0.1;
        auto u = conditional_evolution(h, 0.37, p);
        EXPECT_TRUE(is_unitary(u, 1e-9));
        EXPECT_NO_THROW(ancilla_block(u, 0));
        EXPECT_NO_THROW(ancilla_block(u, 1));
    }
    EXPECT_THROW(ancilla_block(kron(DenseOperator::identity(2), pauli_matrix(A::X)), 0), std::invalid_argument);
}

TEST(ConditionalEvolution, SingleCouplingAccuracy) {
    PairHamiltonian h(2);
    h.set_J(0, 1, A::Z, A::Z, 1.0);
    ConversionParams p;
    p.epsilon = 0.05;
    auto err = spectral_norm(conditional_evolution(h, 0.5, p) - ideal_conditional(h, 0.5));
    EXPECT_LT(err, 0.05);
}

TEST(ConditionalEvolution, ConvergesLinearlyInEpsilon) {
    auto h = random_hamiltonian(3, 7, 1.0);
    auto target = ideal_conditional(h, 0.3);
    double previous = INFINITY;
    for (double eps : {0.08, 0.04, 0.02}) {
        ConversionParams p;
        p.epsilon = eps;
        double err = spectral_norm(conditional_evolution(h, 0.3, p) - target);
        EXPECT_LT(err, previous * 0.6);
        previous = err;
    }
}

TEST(ConditionalEvolution, SkipsZeroTermsConsistently) {
    PairHamiltonian h(3);
    h.set_J(0, 2, A::X, A::Y, 0.8);
    h.set_r(1, A::Z, 0.3);
    ConversionParams p;
    p.epsilon = 0.05;
    auto full = conditional_evolution(h, 0.2, p);
    p.skip_zero_terms = true;
    auto sparse = conditional_evolution(h, 0.2, p);
    auto target = ideal_conditional(h, 0.2);
    EXPECT_LT(spectral_norm(sparse - target), 0.05);
    EXPECT_LT(spectral_norm(full - target), 0.05);
}

TEST(ConditionalEvolution, RejectsBadInput) {
    ConversionParams p;
    EXPECT_THROW(conditional_evolution(PairHamiltonian(1), 0.1, p), std::invalid_argument);
    EXPECT_THROW(conditional_evolution(PairHamiltonian(2), -0.1, p), std::invalid_argument);
}

TEST(IdealConditional, BlocksAreForwardAndBackward) {
    auto h = random_hamiltonian(2, 8, 1.0);
    auto u = ideal_conditional(h, 0.4);
    EXPECT_LT(frobenius_norm(ancilla_block(u, 0) - expm_i(to_dense(h), 0.4)), 1e-12);
    EXPECT_LT(frobenius_norm(ancilla_block(u, 1) - expm_i(to_dense(h), -0.4)), 1e-12);
}

}  // namespace
}  // namespace condham
