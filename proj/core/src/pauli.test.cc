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


#include "condham/pauli.h"

#include <gtest/gtest.h>

namespace condham {
namespace {

constexpr PauliAxis kAll[4] = {PauliAxis::I, PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

TEST(PauliAxis, CyclicLabels) {
    EXPECT_EQ(successor(PauliAxis::X), PauliAxis::Y);
    EXPECT_EQ(successor(PauliAxis::Y), PauliAxis::Z);
    EXPECT_EQ(successor(PauliAxis::Z), PauliAxis::X);
    EXPECT_THROW(cyclic_label(PauliAxis::I), std::invalid_argument);
    EXPECT_EQ(axis_from_label(-1), PauliAxis::Z);
    EXPECT_EQ(parse_axis('y'), PauliAxis::Y);
    EXPECT_THROW(parse_axis('q'), std::invalid_argument);
}

TEST(PauliAxis, CommutatorMatchesCyclicOrder) {
    // [s_a, s_{a+1}] = 2i s_{a+2}
    for (PauliAxis a : kAxes) {
        auto b = successor(a);
        auto c = successor(b);
        auto lhs = commutator(pauli_matrix(a), pauli_matrix(b));
        EXPECT_LT(frobenius_norm(lhs - Complex(0, 2) * pauli_matrix(c)), 1e-15);
    }
}

TEST(PauliString, ParseAndPrint) {
    auto p = PauliString::parse("X0.Z2", 3);
    EXPECT_EQ(p.axis(0), PauliAxis::X);
    EXPECT_EQ(p.axis(1), PauliAxis::I);
    EXPECT_EQ(p.str(), "X0.Z2");
    EXPECT_EQ(PauliString::parse("I", 2).str(), "I");
    EXPECT_THROW(PauliString::parse("X5", 3), std::invalid_argument);
    EXPECT_THROW(PauliString::parse("X0.Y0", 3), std::invalid_argument);
    EXPECT_THROW(PauliString::parse("Xa", 3), std::invalid_argument);
    EXPECT_THROW(PauliString::pair(3, 1, PauliAxis::X, 1, PauliAxis::Y), std::invalid_argument);
}

TEST(PauliString, ProductAgreesWithMatrices) {
    // Exhaustive over two-qubit strings: the phase-free product matches the
    // dense product up to a global phase of modulus one.
    for (auto a0 : kAll) {
        for (auto a1 : kAll) {
            for (auto b0 : kAll) {
                for (auto b1 : kAll) {
                    PauliString p = PauliString(2).with(0, a0).with(1, a1);
                    PauliString q = PauliString(2).with(0, b0).with(1, b1);
                    auto prod = embed(p, 2) * embed(q, 2);
                    auto expect = embed(p.times_ignoring_phase(q), 2);
                    Complex phase = (expect.adjoint() * prod).trace() / 4.0;
                    EXPECT_NEAR(std::abs(phase), 1, 1e-14);
                    EXPECT_LT(frobenius_norm(prod - phase * expect), 1e-14);
                    bool commute = frobenius_norm(commutator(embed(p, 2), embed(q, 2))) < 1e-14;
                    EXPECT_EQ(commute, p.commutes_with(q)) << p.str() << " " << q.str();
                }
            }
        }
    }
}

TEST(Embed, QubitZeroIsMostSignificant) {
    auto x0 = embed(PauliString::single(2, 0, PauliAxis::X), 2);
    EXPECT_EQ(x0, kron(pauli_matrix(PauliAxis::X), DenseOperator::identity(2)));
    auto yz = embed(PauliString::pair(2, 0, PauliAxis::Y, 1, PauliAxis::Z), 2);
    EXPECT_EQ(yz, kron(pauli_matrix(PauliAxis::Y), pauli_matrix(PauliAxis::Z)));
    // A 2-qubit string embeds into a wider register with trailing identities.
    auto wide = embed(PauliString::single(2, 1, PauliAxis::Y), 3);
    EXPECT_EQ(wide, kron(kron(DenseOperator::identity(2), pauli_matrix(PauliAxis::Y)),
                         DenseOperator::identity(2)));
    EXPECT_THROW(embed(PauliString::single(3, 2, PauliAxis::X), 2), std::invalid_argument);
}

TEST(PauliString, WeightAndOrdering) {
    auto p = PauliString::parse("X0.Y1.Z3", 4);
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_FALSE(p.is_identity());
    EXPECT_TRUE(PauliString(4).is_identity());
    EXPECT_NE(p, PauliString::parse("X0.Y1", 4));
}

}  // namespace
}  // namespace condham
