// SPDX-License-Identifier: MIT
#include "hgs/field_poly.hpp"

namespace hgs {

namespace {

void require_field(const GaloisRing& ring) {
    if (!ring.is_field()) throw Error("NotField", "polynomial interpolation needs r = 1");
}

}  // namespace

FieldPolynomial make_polynomial(std::vector<Elem> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return FieldPolynomial{std::move(coeffs)};
}

Elem evaluate(const GaloisRing& ring, const FieldPolynomial& f, Elem x) {
    Elem acc = ring.zero();
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = ring.add(ring.mul(acc, x), *it);
    return acc;
}

FieldPolynomial poly_mul(const GaloisRing& ring, const FieldPolynomial& a, const FieldPolynomial& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    std::vector<Elem> c(a.coeffs.size() + b.coeffs.size() - 1, ring.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] = ring.add(c[i + j], ring.mul(a.coeffs[i], b.coeffs[j]));
    return make_polynomial(std::move(c));
}

FieldPolynomial poly_add(const GaloisRing& ring, const FieldPolynomial& a, const FieldPolynomial& b) {
    std::vector<Elem> c(std::max(a.coeffs.size(), b.coeffs.size()), ring.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] = ring.add(c[i], a.coeffs[i]);
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] = ring.add(c[i], b.coeffs[i]);
    return make_polynomial(std::move(c));
}

Elem field_inverse(const GaloisRing& ring, Elem a) {
    for (Elem b = 1; b < ring.size(); ++b)
        if (ring.mul(a, b) == ring.one()) return b;
    throw Error("Singular", "element has no inverse");
}

ElemMatrix matrix_mul(const GaloisRing& ring, const ElemMatrix& a, const ElemMatrix& b) {
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
    ElemMatrix c(n, std::vector<Elem>(m, ring.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < m; ++j) c[i][j] = ring.add(c[i][j], ring.mul(a[i][k], b[k][j]));
    return c;
}

ElemMatrix matrix_identity(const GaloisRing& ring) {
    ElemMatrix id(ring.size(), std::vector<Elem>(ring.size(), ring.zero()));
    for (std::size_t i = 0; i < ring.size(); ++i) id[i][i] = ring.one();
    return id;
}

ElemMatrix matrix_inverse(const GaloisRing& ring, const ElemMatrix& m) {
    require_field(ring);
    const std::size_t n = m.size();
    ElemMatrix a = m;
    ElemMatrix inv(n, std::vector<Elem>(n, ring.zero()));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = ring.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == ring.zero()) ++pivot;
        if (pivot == n) throw Error("Singular", "matrix is not invertible");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Elem scale = field_inverse(ring, a[col][col]);
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = ring.mul(a[col][j], scale);
            inv[col][j] = ring.mul(inv[col][j], scale);
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == ring.zero()) continue;
            const Elem factor = ring.neg(a[row][col]);
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] = ring.add(a[row][j], ring.mul(factor, a[col][j]));
                inv[row][j] = ring.add(inv[row][j], ring.mul(factor, inv[col][j]));
            }
        }
    }
    return inv;
}

ElemMatrix power_matrix(const GaloisRing& ring) {
    require_field(ring);
    const std::size_t q = ring.size();
    ElemMatrix a(q, std::vector<Elem>(q));
    for (Elem x = 0; x < q; ++x)
        for (std::size_t k = 0; k < q; ++k) a[x][k] = ring.pow(x, k);
    return a;
}

ElemMatrix power_matrix_inverse(const GaloisRing& ring) {
    require_field(ring);
    const auto xi_opt = ring.primitive_theta();
    if (!xi_opt) throw Error("NoPrimitiveElement", "field has no primitive element");
    const Elem xi = *xi_opt;
    const std::size_t q = ring.size();

    // Column order (0, xi^0, ..., xi^{q-2}).
    std::vector<Elem> order{ring.zero()};
    for (std::size_t i = 0; i + 1 < q; ++i) order.push_back(ring.pow(xi, i));

    ElemMatrix block(q, std::vector<Elem>(q, ring.zero()));
    block[0][0] = ring.one();
    for (std::size_t k = 0; k + 1 < q; ++k) {
        block[k + 1][0] = (k == q - 2) ? ring.neg(ring.one()) : ring.zero();
        for (std::size_t l = 0; l + 1 < q; ++l)
            block[k + 1][l + 1] = ring.neg(ring.pow(xi, (q - 2 - k) * l));
    }

    ElemMatrix out(q, std::vector<Elem>(q));
    for (std::size_t k = 0; k < q; ++k)
        for (std::size_t c = 0; c < q; ++c) out[k][order[c]] = block[k][c];
    return out;
}

FieldPolynomial m_polynomial(const GaloisRing& ring, const Exponent& u) {
    const auto inv = power_matrix_inverse(ring);
    const std::size_t q = ring.size();
    std::vector<Elem> c(q, ring.zero());
    for (std::size_t k = 0; k < q; ++k)
        for (Elem x = 0; x < q; ++x) c[k] = ring.add(c[k], ring.mul(inv[k][x], power(ring, x, u)));
    return make_polynomial(std::move(c));
}

FieldPolynomial universal_polynomial(const GaloisRing& ring) {
    require_field(ring);
    std::vector<Elem> c(ring.size() + 1, ring.zero());
    c[1] = ring.neg(ring.one());
    c[ring.size()] = ring.one();
    return make_polynomial(std::move(c));
}

FieldPolynomial reduce_mod_universal(const GaloisRing& ring, const FieldPolynomial& f) {
    require_field(ring);
    const std::size_t q = ring.size();
    std::vector<Elem> c = f.coeffs;
    // x^k = x^{k-(q-1)} modulo x^q - x for k >= q.
    for (std::size_t k = c.size(); k-- > q;) {
        c[k - (q - 1)] = ring.add(c[k - (q - 1)], c[k]);
        c[k] = ring.zero();
    }
    return make_polynomial(std::move(c));
}

ElemMatrix basic_power_matrix(const GaloisRing& ring) {
    require_field(ring);
    const auto special = special_exponents(ring);
    const std::size_t q = ring.size();
    ElemMatrix c(q, std::vector<Elem>(q));
    for (Elem x = 0; x < q; ++x)
        for (Elem y = 0; y < q; ++y) c[x][y] = power(ring, x, special.s[y]);
    return c;
}

ElemMatrix basic_power_matrix_inverse(const GaloisRing& ring) {
    return matrix_inverse(ring, basic_power_matrix(ring));
}

std::vector<Elem> expand_in_basic(const GaloisRing& ring, const FieldPolynomial& f) {
    require_field(ring);
    const std::size_t q = ring.size();
    if (!f.coeffs.empty() && f.degree() > q - 1) throw Error("DegreeTooHigh", "degree must be at most q-1");
    const auto cinv = basic_power_matrix_inverse(ring);
    const auto a = power_matrix(ring);
    std::vector<Elem> values(q, ring.zero());
    for (Elem z = 0; z < q; ++z)
        for (std::size_t k = 0; k < f.coeffs.size(); ++k)
            values[z] = ring.add(values[z], ring.mul(a[z][k], f.coeffs[k]));
    std::vector<Elem> out(q, ring.zero());
    for (Elem y = 0; y < q; ++y)
        for (Elem z = 0; z < q; ++z) out[y] = ring.add(out[y], ring.mul(cinv[y][z], values[z]));
    return out;
}

}  // namespace hgs
