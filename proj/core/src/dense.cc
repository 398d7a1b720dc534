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

#include "condham/dense.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace condham {

DenseOperator::DenseOperator(size_t dim) : dim_(dim), entries_(dim * dim) {
}

DenseOperator DenseOperator::identity(size_t dim) {
    DenseOperator result(dim);
    for (size_t i = 0; i < dim; i++) {
        result(i, i) = 1.0;
    }
    return result;
}

DenseOperator DenseOperator::diagonal(std::span<const Complex> diag) {
    DenseOperator result(diag.size());
    for (size_t i = 0; i < diag.size(); i++) {
        result(i, i) = diag[i];
    }
    return result;
}

DenseOperator DenseOperator::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    DenseOperator result(rows.size());
    size_t r = 0;
    for (const auto &row : rows) {
        if (row.size() != rows.size()) {
            throw std::invalid_argument("from_rows: matrix must be square");
        }
        size_t c = 0;
        for (const auto &value : row) {
            result(r, c++) = value;
        }
        r++;
    }
    return result;
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator result(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            result(c, r) = std::conj((*this)(r, c));
        }
    }
    return result;
}

Complex DenseOperator::trace() const {
    Complex total = 0;
    for (size_t i = 0; i < dim_; i++) {
        total += (*this)(i, i);
    }
    return total;
}

DenseOperator &DenseOperator::operator+=(const DenseOperator &other) {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("dimension mismatch in operator addition");
    }
    for (size_t i = 0; i < entries_.size(); i++) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

DenseOperator &DenseOperator::operator-=(const DenseOperator &other) {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("dimension mismatch in operator subtraction");
    }
    for (size_t i = 0; i < entries_.size(); i++) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

DenseOperator &DenseOperator::operator*=(Complex scalar) {
    for (auto &e : entries_) {
        e *= scalar;
    }
    return *this;
}

DenseOperator operator+(DenseOperator a, const DenseOperator &b) {
    a += b;
    return a;
}

DenseOperator operator-(DenseOperator a, const DenseOperator &b) {
    a -= b;
    return a;
}

DenseOperator operator*(Complex scalar, DenseOperator a) {
    a *= scalar;
    return a;
}

DenseOperator operator*(const DenseOperator &a, const DenseOperator &b) {
    size_t n = a.dim();
    if (b.dim() != n) {
        throw std::invalid_argument("dimension mismatch in operator product");
    }
    DenseOperator result(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (size_t j = 0; j < n; j++) {
                result(i, j) += aik * b(k, j);
            }
        }
    }
    return result;
}

std::vector<Complex> operator*(const DenseOperator &a, std::span<const Complex> v) {
    size_t n = a.dim();
    if (v.size() != n) {
        throw std::invalid_argument("dimension mismatch in matrix-vector product");
    }
    std::vector<Complex> result(n);
    for (size_t i = 0; i < n; i++) {
        Complex total = 0;
        for (size_t j = 0; j < n; j++) {
            total += a(i, j) * v[j];
        }
        result[i] = total;
    }
    return result;
}

DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
    size_t na = a.dim();
    size_t nb = b.dim();
    DenseOperator result(na * nb);
    for (size_t ar = 0; ar < na; ar++) {
        for (size_t ac = 0; ac < na; ac++) {
            Complex s = a(ar, ac);
            if (s == Complex{}) {
                continue;
            }
            for (size_t br = 0; br < nb; br++) {
                for (size_t bc = 0; bc < nb; bc++) {
                    result(ar * nb + br, ac * nb + bc) = s * b(br, bc);
                }
            }
        }
    }
    return result;
}

DenseOperator commutator(const DenseOperator &a, const DenseOperator &b) {
    return a * b - b * a;
}

double frobenius_norm(const DenseOperator &a) {
    double total = 0;
    for (const auto &e : a.entries()) {
        total += std::norm(e);
    }
    return std::sqrt(total);
}

double max_abs_entry(const DenseOperator &a) {
    double best = 0;
    for (const auto &e : a.entries()) {
        best = std::max(best, std::abs(e));
    }
    return best;
}

bool is_hermitian(const DenseOperator &a, double tol) {
    double scale = std::max(1.0, max_abs_entry(a));
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = r; c < a.dim(); c++) {
            if (std::abs(a(r, c) - std::conj(a(c, r))) > tol * scale) {
                return false;
            }
        }
    }
    return true;
}

bool is_unitary(const DenseOperator &u, double tol) {
    DenseOperator gram = u.adjoint() * u;
    return max_abs_entry(gram - DenseOperator::identity(u.dim())) < tol;
}

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiThreshold = 1e-12;

double off_diagonal_norm(const DenseOperator &a) {
    double total = 0;
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = 0; c < a.dim(); c++) {
            if (r != c) {
                total += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(total);
}

// Zeroes a(p, q) with the unitary U = D * R where D removes the phase of a(p, q)
// and R is the real Jacobi rotation of the resulting real symmetric 2x2 block.
void jacobi_rotate(DenseOperator &a, DenseOperator &v, size_t p, size_t q) {
    Complex apq = a(p, q);
    double mag = std::abs(apq);
    if (mag == 0) {
        return;
    }
    Complex phase = apq / mag;
    double app = a(p, p).real();
    double aqq = a(q, q).real();
    double theta = (aqq - app) / (2 * mag);
    double t = theta >= 0 ? 1.0 / (theta + std::sqrt(theta * theta + 1))
                          : -1.0 / (-theta + std::sqrt(theta * theta + 1));
    double c = 1.0 / std::sqrt(t * t + 1);
    double s = t * c;
    Complex em = std::conj(phase);  // e^{-i phi}

    size_t n = a.dim();
    // A <- A U  (columns p, q)
    for (size_t r = 0; r < n; r++) {
        Complex arp = a(r, p);
        Complex arq = a(r, q);
        a(r, p) = c * arp - s * em * arq;
        a(r, q) = s * arp + c * em * arq;
    }
    // A <- U^dagger A  (rows p, q)
    for (size_t col = 0; col < n; col++) {
        Complex apc = a(p, col);
        Complex aqc = a(q, col);
        a(p, col) = c * apc - s * phase * aqc;
        a(q, col) = s * apc + c * phase * aqc;
    }
    a(p, q) = 0;
    a(q, p) = 0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
    // V <- V U
    for (size_t r = 0; r < n; r++) {
        Complex vrp = v(r, p);
        Complex vrq = v(r, q);
        v(r, p) = c * vrp - s * em * vrq;
        v(r, q) = s * vrp + c * em * vrq;
    }
}

}  // namespace

EigenDecomposition hermitian_eig(const DenseOperator &input) {
    if (!is_hermitian(input)) {
        throw std::invalid_argument("hermitian_eig: input is not Hermitian");
    }
    size_t n = input.dim();
    // Work on the exactly Hermitian part so rounding in the input cannot stall convergence.
    DenseOperator a = 0.5 * (input + input.adjoint());
    DenseOperator v = DenseOperator::identity(n);
    double target = kJacobiThreshold * std::max(1.0, frobenius_norm(a));

    int sweep = 0;
    while (off_diagonal_norm(a) > target) {
        if (++sweep > kMaxJacobiSweeps) {
            throw std::runtime_error("hermitian_eig: Jacobi sweeps did not converge");
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                jacobi_rotate(a, v, p, q);
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return a(x, x).real() < a(y, y).real();
    });

    EigenDecomposition result{std::vector<double>(n), DenseOperator(n)};
    for (size_t i = 0; i < n; i++) {
        result.values[i] = a(order[i], order[i]).real();
        for (size_t r = 0; r < n; r++) {
            result.vectors(r, i) = v(r, order[i]);
        }
    }
    return result;
}

DenseOperator expm_i(const EigenDecomposition &eig, double t) {
    size_t n = eig.values.size();
    std::vector<Complex> phases(n);
    for (size_t i = 0; i < n; i++) {
        phases[i] = std::polar(1.0, -eig.values[i] * t);
    }
    const DenseOperator &v = eig.vectors;
    DenseOperator result(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            Complex total = 0;
            for (size_t i = 0; i < n; i++) {
                total += v(r, i) * phases[i] * std::conj(v(c, i));
            }
            result(r, c) = total;
        }
    }
    return result;
}

DenseOperator expm_i(const DenseOperator &a, double t) {
    return expm_i(hermitian_eig(a), t);
}

double spectral_norm(const DenseOperator &a) {
    if (a.dim() == 0) {
        return 0;
    }
    auto eig = hermitian_eig(a.adjoint() * a);
    return std::sqrt(std::max(0.0, eig.values.back()));
}

QuantumState::QuantumState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    if (std::abs(total - 1) > 1e-10) {
        throw std::invalid_argument("QuantumState: amplitudes are not normalized (norm^2 = " +
                                    std::to_string(total) + ")");
    }
}

QuantumState QuantumState::basis(size_t dim, size_t index) {
    if (index >= dim) {
        throw std::invalid_argument("QuantumState::basis: index out of range");
    }
    std::vector<Complex> amps(dim);
    amps[index] = 1;
    return QuantumState(std::move(amps));
}

DensityMatrix::DensityMatrix(DenseOperator rho) : rho_(std::move(rho)) {
    if (!is_hermitian(rho_)) {
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    }
    Complex tr = rho_.trace();
    if (std::abs(tr - 1.0) > 1e-10) {
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
    if (hermitian_eig(rho_).values.front() < -1e-9) {
        throw std::invalid_argument("DensityMatrix: not positive semidefinite");
    }
}

DensityMatrix DensityMatrix::maximally_mixed(size_t dim) {
    return DensityMatrix((1.0 / static_cast<double>(dim)) * DenseOperator::identity(dim));
}

DensityMatrix DensityMatrix::pure(const QuantumState &state) {
    size_t n = state.dim();
    DenseOperator rho(n);
    auto amps = state.amplitudes();
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            rho(r, c) = amps[r] * std::conj(amps[c]);
        }
    }
    return DensityMatrix(std::move(rho));
}

std::vector<std::pair<double, QuantumState>> DensityMatrix::mixture(double cutoff) const {
    auto eig = hermitian_eig(rho_);
    std::vector<std::pair<double, QuantumState>> result;
    size_t n = rho_.dim();
    for (size_t i = 0; i < n; i++) {
        if (eig.values[i] <= cutoff) {
            continue;
        }
        std::vector<Complex> amps(n);
        double norm = 0;
        for (size_t r = 0; r < n; r++) {
            amps[r] = eig.vectors(r, i);
            norm += std::norm(amps[r]);
        }
        for (auto &a : amps) {
            a /= std::sqrt(norm);
        }
        result.emplace_back(eig.values[i], QuantumState(std::move(amps)));
    }
    return result;
}

}  // namespace condham
