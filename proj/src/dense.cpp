// SPDX-License-Identifier: MIT
#include "hgs/dense.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace hgs {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<Complex>& d) {
    DenseMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols != b.rows) throw Error("ShapeMismatch", "matrix product shapes differ");
    DenseMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Complex v = a(i, k);
            if (v == Complex(0)) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += v * b(k, j);
        }
    return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw Error("ShapeMismatch", "matrix sum shapes differ");
    DenseMatrix c = a;
    for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] += b.data[i];
    return c;
}

DenseMatrix operator*(Complex s, const DenseMatrix& a) {
    DenseMatrix c = a;
    for (auto& v : c.data) v *= s;
    return c;
}

DenseMatrix adjoint(const DenseMatrix& a) {
    DenseMatrix c(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) c(j, i) = std::conj(a(i, j));
    return c;
}

std::vector<Complex> apply(const DenseMatrix& a, const std::vector<Complex>& v) {
    if (a.cols != v.size()) throw Error("ShapeMismatch", "matrix-vector shapes differ");
    std::vector<Complex> out(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out[i] += a(i, j) * v[j];
    return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) return INFINITY;
    double m = 0;
    for (std::size_t i = 0; i < a.data.size(); ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
    return m;
}

std::size_t dense_cap(std::size_t fallback) {
    if (const char* env = std::getenv("HGS_DENSE_CAP")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw Error("BadParameter", "HGS_DENSE_CAP must be a positive integer");
        }
    }
    return fallback;
}

DenseMatrix fourier_matrix(const GaloisRing& ring, std::size_t l) {
    ConfigSpace space(ring, l);
    const auto n = space.count();
    const double scale = std::pow(static_cast<double>(ring.size()), -static_cast<double>(l) / 2.0);
    DenseMatrix m(n, n);
    for (std::uint64_t i = 0; i < n; ++i) {
        Config y = space.decode(i);
        for (std::uint64_t j = 0; j < n; ++j)
            m(i, j) = scale * root_of_unity(ring, trace_pairing(ring, y, space.decode(j)));
    }
    return m;
}

namespace {

DenseMatrix to_computational(const GaloisRing& ring, const DenseMatrix& hadamard, std::size_t l_out,
                             std::size_t l_in) {
    return fourier_matrix(ring, l_out) * hadamard * adjoint(fourier_matrix(ring, l_in));
}

}  // namespace

DenseMatrix pauli_z_matrix(const GaloisRing& ring, const Config& a) {
    ConfigSpace space(ring, a.size());
    DenseMatrix h(space.count(), space.count());
    for (std::uint64_t i = 0; i < space.count(); ++i)
        h(space.encode(config_add(ring, space.decode(i), a)), i) = 1.0;
    return to_computational(ring, h, a.size(), a.size());
}

DenseMatrix pauli_x_matrix(const GaloisRing& ring, const Config& a) {
    ConfigSpace space(ring, a.size());
    DenseMatrix h(space.count(), space.count());
    for (std::uint64_t i = 0; i < space.count(); ++i)
        h(i, i) = root_of_unity(ring, trace_pairing(ring, a, space.decode(i)));
    return to_computational(ring, h, a.size(), a.size());
}

DenseMatrix he_morphism_matrix(const GaloisRing& ring, const OrdinalMorphism& f) {
    ConfigSpace src(ring, f.source), dst(ring, f.target);
    DenseMatrix h(dst.count(), src.count());
    for (std::uint64_t i = 0; i < src.count(); ++i) h(dst.encode(ef(ring, f, src.decode(i))), i) = 1.0;
    return to_computational(ring, h, f.target, f.source);
}

}  // namespace hgs
