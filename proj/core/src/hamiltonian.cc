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

#include "condham/hamiltonian.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "condham/random.h"

namespace condham {

PairHamiltonian::PairHamiltonian(size_t num_qubits)
    : n_(num_qubits), r_(3 * num_qubits), j_(num_qubits * num_qubits * 9) {
    if (num_qubits < 1 || num_qubits > kMaxSystemQubits) {
        throw std::invalid_argument("PairHamiltonian supports 1.." + std::to_string(kMaxSystemQubits) +
                                    " qubits, got " + std::to_string(num_qubits));
    }
}

size_t PairHamiltonian::r_index(size_t j, PauliAxis a) const {
    if (j >= n_) {
        throw std::invalid_argument("qubit index " + std::to_string(j) + " out of range");
    }
    return 3 * j + cyclic_label(a);
}

size_t PairHamiltonian::j_index(size_t j, size_t k, PauliAxis a, PauliAxis b) const {
    if (j >= n_ || k >= n_) {
        throw std::invalid_argument("qubit index out of range in coupling");
    }
    if (j == k) {
        throw std::invalid_argument("coupling needs two distinct qubits");
    }
    if (j > k) {
        std::swap(j, k);
        std::swap(a, b);
    }
    return ((j * n_ + k) * 3 + cyclic_label(a)) * 3 + cyclic_label(b);
}

double PairHamiltonian::r(size_t j, PauliAxis a) const {
    return r_[r_index(j, a)];
}

void PairHamiltonian::set_r(size_t j, PauliAxis a, double value) {
    r_[r_index(j, a)] = value;
}

double PairHamiltonian::J(size_t j, size_t k, PauliAxis a, PauliAxis b) const {
    return j_[j_index(j, k, a, b)];
}

void PairHamiltonian::set_J(size_t j, size_t k, PauliAxis a, PauliAxis b, double value) {
    j_[j_index(j, k, a, b)] = value;
}

bool PairHamiltonian::is_zero() const {
    for (double v : r_) {
        if (v != 0) {
            return false;
        }
    }
    for (double v : j_) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

void PairHamiltonian::for_each_term(const std::function<void(const PauliString &, double)> &visit) const {
    for (size_t j = 0; j < n_; j++) {
        for (auto a : kAxes) {
            visit(PauliString::single(n_, j, a), r(j, a));
        }
    }
    for (const auto &idx : pair_indices(n_)) {
        visit(PauliString::pair(n_, idx.j, idx.alpha, idx.k, idx.beta), J(idx.j, idx.k, idx.alpha, idx.beta));
    }
}

void PairHamiltonian::transform_terms(const std::function<double(const PauliString &, double)> &rewrite) {
    for (size_t j = 0; j < n_; j++) {
        for (auto a : kAxes) {
            double &slot = r_[r_index(j, a)];
            slot = rewrite(PauliString::single(n_, j, a), slot);
        }
    }
    for (const auto &idx : pair_indices(n_)) {
        double &slot = j_[j_index(idx.j, idx.k, idx.alpha, idx.beta)];
        slot = rewrite(PauliString::pair(n_, idx.j, idx.alpha, idx.k, idx.beta), slot);
    }
}

PairHamiltonian IsolatedTerm::to_hamiltonian(size_t num_qubits) const {
    PairHamiltonian h(num_qubits);
    h.set_r(j, alpha, a);
    h.set_r(k, beta, b);
    h.set_J(j, k, alpha, beta, c);
    return h;
}

IsolatedTerm IsolatedTerm::read_from(const PairHamiltonian &h, size_t j, size_t k, PauliAxis alpha,
                                     PauliAxis beta) {
    return IsolatedTerm{j, k, alpha, beta, h.r(j, alpha), h.r(k, beta), h.J(j, k, alpha, beta)};
}

double one_qubit_scale(TermStage stage, size_t num_qubits, WeightConvention convention) {
    if (stage == TermStage::Isolated) {
        return 1.0;
    }
    if (num_qubits < 2) {
        throw std::invalid_argument("pair-term scaling needs at least 2 qubits");
    }
    double share = 1.0 / static_cast<double>(num_qubits - 1);
    if (convention == WeightConvention::Corrected) {
        share /= 3.0;
    }
    return stage == TermStage::Rescaled ? 2.0 * share : share;
}

DenseOperator to_dense(const PairHamiltonian &h) {
    size_t n = h.num_qubits();
    DenseOperator result(size_t{1} << n);
    h.for_each_term([&](const PauliString &p, double coeff) {
        if (coeff != 0) {
            result += Complex(coeff) * embed(p, n);
        }
    });
    return result;
}

DenseOperator to_dense(const IsolatedTerm &term, size_t num_qubits) {
    DenseOperator result(size_t{1} << num_qubits);
    result += Complex(term.a) * embed(PauliString::single(num_qubits, term.j, term.alpha), num_qubits);
    result += Complex(term.b) * embed(PauliString::single(num_qubits, term.k, term.beta), num_qubits);
    result += Complex(term.c) *
              embed(PauliString::pair(num_qubits, term.j, term.alpha, term.k, term.beta), num_qubits);
    return result;
}

PairHamiltonian conjugate(const PairHamiltonian &h, const PauliString &frame) {
    if (frame.num_qubits() != h.num_qubits()) {
        throw std::invalid_argument("conjugate: frame qubit count differs from Hamiltonian");
    }
    PairHamiltonian result = h;
    result.transform_terms([&](const PauliString &p, double coeff) {
        return p.commutes_with(frame) ? coeff : -coeff;
    });
    return result;
}

PairHamiltonian average(const std::vector<std::pair<double, PairHamiltonian>> &terms) {
    if (terms.empty()) {
        throw std::invalid_argument("average: no terms");
    }
    double total = 0;
    for (const auto &[w, h] : terms) {
        if (w < 0) {
            throw std::invalid_argument("average: negative weight");
        }
        if (h.num_qubits() != terms.front().second.num_qubits()) {
            throw std::invalid_argument("average: qubit count mismatch");
        }
        total += w;
    }
    if (std::abs(total - 1) > 1e-12) {
        throw std::invalid_argument("average: weights sum to " + std::to_string(total) + ", not 1");
    }
    PairHamiltonian result(terms.front().second.num_qubits());
    for (const auto &[w, h] : terms) {
        std::vector<double> coeffs;
        h.for_each_term([&](const PauliString &, double c) { coeffs.push_back(c); });
        size_t i = 0;
        result.transform_terms([&](const PauliString &, double acc) { return acc + w * coeffs[i++]; });
    }
    return result;
}

IsolatedTerm isolated_term(const PairHamiltonian &h, size_t j, size_t k, PauliAxis alpha, PauliAxis beta,
                           double scale_1q) {
    if (j == k) {
        throw std::invalid_argument("isolated_term: j and k must differ");
    }
    if (alpha == PauliAxis::I || beta == PauliAxis::I) {
        throw std::invalid_argument("isolated_term: axes must be non-identity");
    }
    IsolatedTerm term = IsolatedTerm::read_from(h, j, k, alpha, beta);
    term.a *= scale_1q;
    term.b *= scale_1q;
    return term;
}

PairHamiltonian random_hamiltonian(size_t num_qubits, uint64_t seed, double coeff_range) {
    if (num_qubits < 2) {
        throw std::invalid_argument("random_hamiltonian needs at least 2 qubits");
    }
    PairHamiltonian h(num_qubits);
    std::mt19937_64 engine(seed);
    h.transform_terms([&](const PauliString &, double) {
        return coeff_range * (2 * unit_double(engine()) - 1);
    });
    return h;
}

double spread_bound(const PairHamiltonian &h) {
    double total = 0;
    h.for_each_term([&](const PauliString &, double c) { total += std::abs(c); });
    return 2 * total;
}

std::vector<PairIndex> pair_indices(size_t num_qubits) {
    std::vector<PairIndex> out;
    for (size_t j = 0; j < num_qubits; j++) {
        for (size_t k = j + 1; k < num_qubits; k++) {
            for (auto a : kAxes) {
                for (auto b : kAxes) {
                    out.push_back({j, k, a, b});
                }
            }
        }
    }
    return out;
}

DenseOperator reconstruct_from_pair_terms(const PairHamiltonian &h, WeightConvention convention) {
    size_t n = h.num_qubits();
    double scale = one_qubit_scale(TermStage::Halved, n, convention);
    DenseOperator total(size_t{1} << n);
    for (const auto &idx : pair_indices(n)) {
        total += to_dense(isolated_term(h, idx.j, idx.k, idx.alpha, idx.beta, scale), n);
    }
    return total;
}

}  // namespace condham
