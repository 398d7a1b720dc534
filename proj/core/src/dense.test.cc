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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace condham {
namespace {

DenseOperator random_hermitian(size_t dim, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    DenseOperator a(dim);
    for (size_t r = 0; r < dim; r++) {
        a(r, r) = u(rng);
        for (size_t c = r + 1; c < dim; c++) {
            a(r, c) = Complex(u(rng), u(rng));
            a(c, r) = std::conj(a(r, c));
        }
    }
    return a;
}

// Truncated Taylor series of exp(-i A t), independent of the eigensolver.
DenseOperator taylor_exp(const DenseOperator &a, double t) {
    DenseOperator result = DenseOperator::identity(a.dim());
    DenseOperator term = DenseOperator::identity(a.dim());
    for (int k = 1; k < 60; k++) {
        term = term * a;
        term *= Complex(0, -t / k);
        result += term;
    }
    return result;
}

TEST(DenseOperator, ProductAndKron) {
    auto a = DenseOperator::from_rows({{1, 2}, {3, 4}});
    auto b = DenseOperator::from_rows({{0, 1}, {1, 0}});
    auto ab = a * b;
    EXPECT_EQ(ab, DenseOperator::from_rows({{2, 1}, {4, 3}}));
    auto k = kron(a, b);
    EXPECT_EQ(k.dim(), 4u);
    EXPECT_EQ(k(0, 1), Complex(1));
    EXPECT_EQ(k(3, 2), Complex(4));
    EXPECT_EQ(k(2, 3), Complex(4));
    EXPECT_EQ(k(1, 2), Complex(2));
    EXPECT_EQ(k(0, 0), Complex(0));
}

TEST(DenseOperator, AdjointTraceCommutator) {
    auto a = DenseOperator::from_rows({{1, Complex(0, 2)}, {3, 4}});
    EXPECT_EQ(a.adjoint()(1, 0), Complex(0, -2));
    EXPECT_EQ(a.trace(), Complex(5));
    auto x = DenseOperator::from_rows({{0, 1}, {1, 0}});
    auto y = DenseOperator::from_rows({{0, Complex(0, -1)}, {Complex(0, 1), 0}});
    auto z = DenseOperator::from_rows({{1, 0}, {0, -1}});
    EXPECT_LT(frobenius_norm(commutator(x, y) - Complex(0, 2) * z), 1e-15);
}

TEST(HermitianEig, AnalyticBlockSpectrum) {
    // z(x)1 + 1(x)z + x(x)x splits into {|00>,|11>} with [[2,1],[1,-2]] and
    // {|01>,|10>} with [[0,1],[1,0]]: eigenvalues +-sqrt5 and +-1.
    auto h = DenseOperator::from_rows({{2, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, -2}});
    auto eig = hermitian_eig(h);
    const double expected[4] = {-std::sqrt(5.0), -1, 1, std::sqrt(5.0)};
    for (int i = 0; i < 4; i++) {
        EXPECT_NEAR(eig.values[i], expected[i], 1e-12);
    }
}

TEST(HermitianEig, ReconstructsRandomMatrices) {
    for (uint64_t seed = 1; seed <= 20; seed++) {
        size_t dim = 1 + seed % 16;
        auto a = random_hermitian(dim, seed);
        auto eig = hermitian_eig(a);
        for (size_t i = 1; i < dim; i++) {
            EXPECT_LE(eig.values[i - 1], eig.values[i]);
        }
        EXPECT_TRUE(is_unitary(eig.vectors));
        std::vector<Complex> diag(eig.values.begin(), eig.values.end());
        auto back = eig.vectors * DenseOperator::diagonal(diag) * eig.vectors.adjoint();
        EXPECT_LT(frobenius_norm(back - a), 1e-10) << "dim " << dim;
        double trace = 0;
        for (double v : eig.values) {
            trace += v;
        }
        EXPECT_NEAR(trace, a.trace().real(), 1e-10);
    }
}

TEST(HermitianEig, DegenerateAndDiagonalInput) {
    auto eig = hermitian_eig(DenseOperator::identity(8));
    for (double v : eig.values) {
        EXPECT_DOUBLE_EQ(v, 1.0);
    }
    std::vector<Complex> d = {3, -1, 2, -1};
    auto e2 = hermitian_eig(DenseOperator::diagonal(d));
    EXPECT_DOUBLE_EQ(e2.values[0], -1);
    EXPECT_DOUBLE_EQ(e2.values[3], 3);
}

TEST(HermitianEig, RejectsNonHermitian) {
    EXPECT_THROW(hermitian_eig(DenseOperator::from_rows({{0, 1}, {0, 0}})), std::invalid_argument);
}

TEST(ExpmI, MatchesTaylorSeries) {
    for (uint64_t seed = 3; seed < 8; seed++) {
        auto a = random_hermitian(8, seed);
        for (double t : {0.01, 0.3, 1.7}) {
            auto u = expm_i(a, t);
            EXPECT_TRUE(is_unitary(u));
            EXPECT_LT(frobenius_norm(u - taylor_exp(a, t)), 1e-10);
        }
    }
}

TEST(ExpmI, GroupLaw) {
    auto a = random_hermitian(6, 11);
    auto eig = hermitian_eig(a);
    EXPECT_LT(frobenius_norm(expm_i(eig, 0.4) * expm_i(eig, 0.9) - expm_i(eig, 1.3)), 1e-12);
    EXPECT_LT(frobenius_norm(expm_i(eig, 0.7) * expm_i(eig, -0.7) - DenseOperator::identity(6)), 1e-12);
}

TEST(SpectralNorm, KnownValues) {
    EXPECT_NEAR(spectral_norm(DenseOperator::from_rows({{3, 0}, {0, -5}})), 5, 1e-12);
    EXPECT_NEAR(spectral_norm(DenseOperator::from_rows({{0, 2}, {0, 0}})), 2, 1e-12);
    auto u = expm_i(random_hermitian(4, 2), 1.0);
    EXPECT_NEAR(spectral_norm(u), 1, 1e-12);
}

TEST(QuantumState, Validation) {
    EXPECT_THROW(QuantumState({1, 1}), std::invalid_argument);
    double s = 1 / std::sqrt(2.0);
    EXPECT_NO_THROW(QuantumState({s, Complex(0, s)}));
    auto b = QuantumState::basis(4, 2);
    EXPECT_EQ(b.amplitudes()[2], Complex(1));
}

TEST(DensityMatrix, MixtureReproducesOperator) {
    auto rho = DensityMatrix::maximally_mixed(4);
    auto parts = rho.mixture();
    EXPECT_EQ(parts.size(), 4u);
    double s = 1 / std::sqrt(2.0);
    auto pure = DensityMatrix::pure(QuantumState({s, 0, 0, s}));
    auto pp = pure.mixture();
    ASSERT_EQ(pp.size(), 1u);
    EXPECT_NEAR(pp[0].first, 1, 1e-12);
    EXPECT_THROW(DensityMatrix(DenseOperator::from_rows({{2, 0}, {0, -1}})), std::invalid_argument);
}

}  // namespace
}  // namespace condham
