// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "hgs/cyclicity.hpp"

namespace hgs {

// Rows then columns; entries are element indices.
using ElemMatrix = std::vector<std::vector<Elem>>;

// Coefficients, constant term first, trailing zeros trimmed.
struct FieldPolynomial {
    std::vector<Elem> coeffs;
    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool operator==(const FieldPolynomial&) const = default;
};

FieldPolynomial make_polynomial(std::vector<Elem> coeffs);
Elem evaluate(const GaloisRing& ring, const FieldPolynomial& f, Elem x);
FieldPolynomial poly_mul(const GaloisRing& ring, const FieldPolynomial& a, const FieldPolynomial& b);
FieldPolynomial poly_add(const GaloisRing& ring, const FieldPolynomial& a, const FieldPolynomial& b);

Elem field_inverse(const GaloisRing& ring, Elem a);
ElemMatrix matrix_mul(const GaloisRing& ring, const ElemMatrix& a, const ElemMatrix& b);
ElemMatrix matrix_identity(const GaloisRing& ring);
// Gauss-Jordan elimination over a field.
ElemMatrix matrix_inverse(const GaloisRing& ring, const ElemMatrix& m);

// A[x][k] = x^k with 0^0 = 1.
ElemMatrix power_matrix(const GaloisRing& ring);
// Closed-form inverse assembled in (0, 1, xi, ..., xi^{q-2}) order.
ElemMatrix power_matrix_inverse(const GaloisRing& ring);

FieldPolynomial m_polynomial(const GaloisRing& ring, const Exponent& u);
FieldPolynomial universal_polynomial(const GaloisRing& ring);
FieldPolynomial reduce_mod_universal(const GaloisRing& ring, const FieldPolynomial& f);

// C[x][y] = x^{s(y)}
ElemMatrix basic_power_matrix(const GaloisRing& ring);
ElemMatrix basic_power_matrix_inverse(const GaloisRing& ring);

// Coefficients c_y with f(x) = sum_y c_y m_{s(y)}(x).
std::vector<Elem> expand_in_basic(const GaloisRing& ring, const FieldPolynomial& f);

}  // namespace hgs
