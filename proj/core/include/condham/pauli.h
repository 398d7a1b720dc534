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

#ifndef CONDHAM_PAULI_H
#define CONDHAM_PAULI_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "condham/dense.h"

namespace condham {

/// Single-qubit Pauli axis. The non-identity axes carry the cyclic labels
/// X=0, Y=1, Z=2 of the additive group {0,1,2}.
enum class PauliAxis : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<PauliAxis, 3> kAxes = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

/// Cyclic label in {0,1,2}; throws std::invalid_argument on I.
int cyclic_label(PauliAxis axis);
PauliAxis axis_from_label(int label);

/// X -> Y -> Z -> X. Throws std::invalid_argument on I.
PauliAxis successor(PauliAxis axis);

char axis_char(PauliAxis axis);
/// Accepts I/X/Y/Z in either case, and '1' for identity.
PauliAxis parse_axis(char c);

/// Dense 2x2 Pauli matrix.
const DenseOperator &pauli_matrix(PauliAxis axis);

/// Tensor product of single-qubit Paulis on `n` qubits, phase-free.
///
/// Qubit 0 is the most significant tensor factor. Each qubit carries at most
/// one axis; building a string that names the same qubit twice is rejected.
class PauliString {
   public:
    explicit PauliString(size_t num_qubits);

    static PauliString single(size_t num_qubits, size_t qubit, PauliAxis axis);
    static PauliString pair(size_t num_qubits, size_t q1, PauliAxis a1, size_t q2, PauliAxis a2);
    /// Parses the dot-separated sparse form, e.g. "X0.Z2". "I" is the identity.
    static PauliString parse(std::string_view text, size_t num_qubits);

    size_t num_qubits() const {
        return axes_.size();
    }
    PauliAxis axis(size_t qubit) const;
    /// Sets the axis of a qubit that is currently identity. Throws if the qubit
    /// already carries a non-identity axis or is out of range.
    PauliString &with(size_t qubit, PauliAxis axis);

    size_t weight() const;
    bool is_identity() const {
        return weight() == 0;
    }
    /// Strings commute iff the number of positions where both are non-identity
    /// and different is even.
    bool commutes_with(const PauliString &other) const;
    /// Qubit-wise product with the phase discarded.
    PauliString times_ignoring_phase(const PauliString &other) const;

    std::string str() const;

    bool operator==(const PauliString &other) const = default;
    auto operator<=>(const PauliString &other) const = default;

   private:
    std::vector<PauliAxis> axes_;
};

/// 2^n dimensional matrix of `p` with identities on unflagged qubits.
/// Throws std::invalid_argument if `p` flags a qubit index >= n.
DenseOperator embed(const PauliString &p, size_t n);

}  // namespace condham

#endif
