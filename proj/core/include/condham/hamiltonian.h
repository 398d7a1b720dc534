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

#ifndef CONDHAM_HAMILTONIAN_H
#define CONDHAM_HAMILTONIAN_H

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "condham/dense.h"
#include "condham/pauli.h"

namespace condham {

inline constexpr size_t kMaxSystemQubits = 8;

/// Hamiltonian made of single-qubit Pauli terms and two-qubit Pauli products,
///
///     H = sum_{j,a} r[j][a] s_a^j + sum_{j<k,a,b} J[j][k][a][b] s_a^j s_b^k,
///
/// stored densely over all index tuples. Energies are in units with hbar = 1.
class PairHamiltonian {
   public:
    /// Throws std::invalid_argument unless 1 <= n <= kMaxSystemQubits.
    explicit PairHamiltonian(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }

    double r(size_t j, PauliAxis a) const;
    void set_r(size_t j, PauliAxis a, double value);

    /// Coupling of s_a^j s_b^k. Either qubit order is accepted; (k, j, b, a)
    /// addresses the same coefficient.
    double J(size_t j, size_t k, PauliAxis a, PauliAxis b) const;
    void set_J(size_t j, size_t k, PauliAxis a, PauliAxis b, double value);

    bool is_zero() const;

    /// Visits every coefficient with its Pauli string, r terms first in (j, a)
    /// order, then couplings in lexicographic (j, k, a, b) order with j < k.
    void for_each_term(const std::function<void(const PauliString &, double)> &visit) const;
    /// Same order as for_each_term; the callback may rewrite the coefficient.
    void transform_terms(const std::function<double(const PauliString &, double)> &rewrite);

    bool operator==(const PairHamiltonian &other) const = default;

   private:
    size_t r_index(size_t j, PauliAxis a) const;
    size_t j_index(size_t j, size_t k, PauliAxis a, PauliAxis b) const;

    size_t n_;
    std::vector<double> r_;
    std::vector<double> j_;
};

/// a s_alpha^j + b s_beta^k + c s_alpha^j s_beta^k.
struct IsolatedTerm {
    size_t j = 0;
    size_t k = 1;
    PauliAxis alpha = PauliAxis::X;
    PauliAxis beta = PauliAxis::X;
    double a = 0;
    double b = 0;
    double c = 0;

    PairHamiltonian to_hamiltonian(size_t num_qubits) const;
    /// Reads the (a, b, c) coefficients for this term's indices out of `h`.
    static IsolatedTerm read_from(const PairHamiltonian &h, size_t j, size_t k, PauliAxis alpha,
                                  PauliAxis beta);

    bool operator==(const IsolatedTerm &other) const = default;
};

/// How the single-qubit coefficients are shared among the pair terms.
///
/// `Literal` uses the factors 2/(n-1) and 1/(n-1) literally. Each r coefficient
/// then appears in (n-1) pairs times 3 partner axes, so summing all halved pair
/// terms over-counts single-qubit parts by 3. `Corrected` divides by that 3 so
/// the pair terms sum back to H exactly.
enum class WeightConvention { Literal, Corrected };

/// Which of the three single-qubit scalings of an isolated term.
enum class TermStage {
    Isolated,  ///< scale 1
    Rescaled,  ///< doubled share, fed to the commutator construction
    Halved,    ///< the share that sums back to H
};

double one_qubit_scale(TermStage stage, size_t num_qubits, WeightConvention convention);

DenseOperator to_dense(const PairHamiltonian &h);
DenseOperator to_dense(const IsolatedTerm &term, size_t num_qubits);

/// v H v^dagger for a Pauli frame v: flips the sign of every coefficient whose
/// Pauli string anticommutes with the frame.
PairHamiltonian conjugate(const PairHamiltonian &h, const PauliString &frame);

/// Coefficient-wise convex combination. Weights must be non-negative and sum to
/// 1 within 1e-12.
PairHamiltonian average(const std::vector<std::pair<double, PairHamiltonian>> &terms);

/// Extracts a = scale r^j_alpha, b = scale r^k_beta, c = J_{j,k,alpha,beta}.
IsolatedTerm isolated_term(const PairHamiltonian &h, size_t j, size_t k, PauliAxis alpha,
                           PauliAxis beta, double scale_1q);

/// Deterministic given the seed; coefficients uniform in [-range, range].
PairHamiltonian random_hamiltonian(size_t num_qubits, uint64_t seed, double coeff_range);

/// 2 * (sum |r| + sum |J|), an upper bound on lambda_max - lambda_min.
double spread_bound(const PairHamiltonian &h);

/// Every (j < k, alpha, beta) index tuple in lexicographic order.
struct PairIndex {
    size_t j;
    size_t k;
    PauliAxis alpha;
    PauliAxis beta;
};
std::vector<PairIndex> pair_indices(size_t num_qubits);

/// Dense sum of all halved pair terms under the given convention. Equals
/// to_dense(h) exactly for `Corrected`.
DenseOperator reconstruct_from_pair_terms(const PairHamiltonian &h, WeightConvention convention);

}  // namespace condham

#endif
