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

#ifndef CONDHAM_DENSE_H
#define CONDHAM_DENSE_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace condham {

using Complex = std::complex<double>;

/// Square complex matrix, row-major, full storage.
///
/// Dimensions are small (at most 2^13) so every operation is a plain dense
/// loop. Values are immutable in the sense that all free functions return new
/// operators; the mutable element accessors exist for construction.
class DenseOperator {
   public:
    DenseOperator() = default;
    explicit DenseOperator(size_t dim);

    static DenseOperator identity(size_t dim);
    static DenseOperator diagonal(std::span<const Complex> diag);
    static DenseOperator from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    size_t dim() const {
        return dim_;
    }
    Complex &operator()(size_t row, size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(size_t row, size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    DenseOperator adjoint() const;
    Complex trace() const;

    DenseOperator &operator+=(const DenseOperator &other);
    DenseOperator &operator-=(const DenseOperator &other);
    DenseOperator &operator*=(Complex scalar);

    bool operator==(const DenseOperator &other) const = default;

   private:
    size_t dim_ = 0;
    std::vector<Complex> entries_;
};

DenseOperator operator+(DenseOperator a, const DenseOperator &b);
DenseOperator operator-(DenseOperator a, const DenseOperator &b);
DenseOperator operator*(const DenseOperator &a, const DenseOperator &b);
DenseOperator operator*(Complex scalar, DenseOperator a);
std::vector<Complex> operator*(const DenseOperator &a, std::span<const Complex> v);

/// Tensor product; `a` acts on the more significant index bits.
DenseOperator kron(const DenseOperator &a, const DenseOperator &b);
DenseOperator commutator(const DenseOperator &a, const DenseOperator &b);

double frobenius_norm(const DenseOperator &a);
double max_abs_entry(const DenseOperator &a);

/// True when max|A - A^dagger| <= tol * max(1, max|A|).
bool is_hermitian(const DenseOperator &a, double tol = 1e-12);
bool is_unitary(const DenseOperator &u, double tol = 1e-10);

struct EigenDecomposition {
    /// Ascending.
    std::vector<double> values;
    /// Column i is the eigenvector for values[i].
    DenseOperator vectors;
};

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Iterates full sweeps over all (p, q) pairs until the off-diagonal
/// Frobenius norm drops below 1e-12 * max(1, ||A||_F). Throws
/// std::invalid_argument for non-Hermitian input and std::runtime_error if
/// the sweep limit is reached.
EigenDecomposition hermitian_eig(const DenseOperator &a);

/// exp(-i A t) for Hermitian A, built from the eigendecomposition.
DenseOperator expm_i(const DenseOperator &a, double t);
DenseOperator expm_i(const EigenDecomposition &eig, double t);

/// Largest singular value, sqrt(max eigenvalue of A^dagger A).
double spectral_norm(const DenseOperator &a);

/// Normalized pure state of a 2^k dimensional register.
class QuantumState {
   public:
    /// Throws std::invalid_argument unless sum |amp|^2 = 1 within 1e-10.
    explicit QuantumState(std::vector<Complex> amplitudes);
    static QuantumState basis(size_t dim, size_t index);

    size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }

   private:
    std::vector<Complex> amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityMatrix {
   public:
    /// Validates Hermiticity, trace 1 within 1e-10 and min eigenvalue >= -1e-9.
    explicit DensityMatrix(DenseOperator rho);
    static DensityMatrix maximally_mixed(size_t dim);
    static DensityMatrix pure(const QuantumState &state);

    size_t dim() const {
        return rho_.dim();
    }
    const DenseOperator &op() const {
        return rho_;
    }

    /// Spectral decomposition into (weight, state) pairs with weight > cutoff.
    std::vector<std::pair<double, QuantumState>> mixture(double cutoff = 1e-14) const;

   private:
    DenseOperator rho_;
};

}  // namespace condham

#endif
