// SPDX-License-Identifier: MIT
#pragma once

#include <complex>
#include <vector>

#include "hgs/qudit_space.hpp"

namespace hgs {

// Row-major complex matrix for float cross-checks.
struct DenseMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Complex> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Complex& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    Complex operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix diagonal(const std::vector<Complex>& d);
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(Complex s, const DenseMatrix& a);
DenseMatrix adjoint(const DenseMatrix& a);
std::vector<Complex> apply(const DenseMatrix& a, const std::vector<Complex>& v);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

// Default guard for dense work; HGS_DENSE_CAP overrides it.
std::size_t dense_cap(std::size_t fallback = 1024);

// F_l in the Hadamard basis. Its matrix is the same in the computational basis.
DenseMatrix fourier_matrix(const GaloisRing& ring, std::size_t l);

// Operators given by their Hadamard-basis definition, returned in
// computational coordinates.
DenseMatrix pauli_z_matrix(const GaloisRing& ring, const Config& a);
DenseMatrix pauli_x_matrix(const GaloisRing& ring, const Config& a);
DenseMatrix he_morphism_matrix(const GaloisRing& ring, const OrdinalMorphism& f);

}  // namespace hgs
