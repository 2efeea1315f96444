// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace hgs;
namespace fx = hgs::fixtures;

namespace {

const std::vector<std::string> kFields{"F2", "F3", "F4", "F5", "F7", "F8", "F9"};

}  // namespace

TEST_CASE("polynomial helpers") {
    const auto& f3 = *catalog_ring("F3");
    CHECK(make_polynomial({1, 2, 0, 0}).coeffs == std::vector<Elem>{1, 2});
    CHECK(make_polynomial({0, 0}).coeffs.empty());
    const auto a = make_polynomial({1, 1});
    CHECK(poly_mul(f3, a, a) == make_polynomial({1, 2, 1}));
    CHECK(poly_add(f3, a, make_polynomial({2, 2})).coeffs.empty());
    CHECK(evaluate(f3, make_polynomial({1, 2, 1}), 2) == 0);
    CHECK(field_inverse(f3, 2) == 2);
    CHECK_THROWS_AS(field_inverse(f3, 0), Error);
    CHECK(universal_polynomial(f3) == make_polynomial({0, 2, 0, 1}));
}

TEST_CASE("power matrices over F3") {
    const auto& f3 = *catalog_ring("F3");
    const ElemMatrix a{{1, 0, 0}, {1, 1, 1}, {1, 2, 1}};
    const ElemMatrix a_inv{{1, 0, 0}, {0, 2, 1}, {2, 2, 2}};
    const ElemMatrix c{{0, 1, 1}, {1, 1, 1}, {1, 1, 2}};
    const ElemMatrix c_inv{{2, 1, 0}, {1, 1, 2}, {0, 2, 1}};
    CHECK(power_matrix(f3) == a);
    CHECK(power_matrix_inverse(f3) == a_inv);
    CHECK(basic_power_matrix(f3) == c);
    CHECK(basic_power_matrix_inverse(f3) == c_inv);
}

TEST_CASE("power matrices over F4") {
    const auto& f4 = *catalog_ring("F4");
    const ElemMatrix a{{1, 0, 0, 0}, {1, 1, 1, 1}, {1, 2, 3, 1}, {1, 3, 2, 1}};
    const ElemMatrix a_inv{{1, 0, 0, 0}, {0, 1, 3, 2}, {0, 1, 2, 3}, {1, 1, 1, 1}};
    const ElemMatrix c{{0, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 2, 1}, {1, 1, 1, 3}};
    const ElemMatrix c_inv{{1, 1, 0, 0}, {1, 1, 2, 3}, {0, 2, 2, 0}, {0, 3, 0, 3}};
    CHECK(power_matrix(f4) == a);
    CHECK(power_matrix_inverse(f4) == a_inv);
    CHECK(basic_power_matrix(f4) == c);
    CHECK(basic_power_matrix_inverse(f4) == c_inv);
}

TEST_CASE("closed-form inverses agree with elimination") {
    for (const auto& name : kFields) {
        CAPTURE(name);
        const auto& ring = *catalog_ring(name);
        const auto id = matrix_identity(ring);
        const auto a = power_matrix(ring);
        CHECK(matrix_mul(ring, a, power_matrix_inverse(ring)) == id);
        CHECK(power_matrix_inverse(ring) == matrix_inverse(ring, a));
        const auto c = basic_power_matrix(ring);
        CHECK(matrix_mul(ring, basic_power_matrix_inverse(ring), c) == id);
        CHECK(basic_power_matrix_inverse(ring) == matrix_inverse(ring, c));
    }
    const auto& f3 = *catalog_ring("F3");
    CHECK_THROWS_AS(matrix_inverse(f3, ElemMatrix{{1, 1}, {2, 2}}), Error);
}

TEST_CASE("non-fields are rejected") {
    for (const char* name : {"Z4", "GR42", "Z9"}) {
        const auto& ring = *catalog_ring(name);
        CHECK_THROWS_AS(power_matrix(ring), Error);
        CHECK_THROWS_AS(basic_power_matrix_inverse(ring), Error);
        CHECK_THROWS_AS(m_polynomial(ring, Exponent{}), Error);
    }
}

TEST_CASE("interpolating polynomials for exponents") {
    const auto& f3 = *catalog_ring("F3");
    CHECK(m_polynomial(f3, make_exponent(f3, {1, 0, 0})) == make_polynomial({0, 0, 1}));
    CHECK(m_polynomial(f3, make_exponent(f3, {0, 0, 1})) == make_polynomial({1, 1, 2}));
    CHECK(m_polynomial(f3, make_exponent(f3, {1, 0, 1})) == make_polynomial({0, 1}));
    CHECK(m_polynomial(f3, Exponent{}) == make_polynomial({1}));

    const auto& f4 = *catalog_ring("F4");
    CHECK(m_polynomial(f4, make_exponent(f4, {0, 0, 1, 0})) == make_polynomial({1, 2, 1, 3}));
    CHECK(m_polynomial(f4, make_exponent(f4, {0, 0, 0, 1})) == make_polynomial({1, 3, 1, 2}));
    CHECK(m_polynomial(f4, make_exponent(f4, {0, 0, 1, 1})) == make_polynomial({1, 1, 0, 1}));

    std::mt19937 rng(41);
    for (const auto& name : kFields) {
        const auto& ring = *catalog_ring(name);
        for (int t = 0; t < 20; ++t) {
            const auto u = fx::random_exponent(ring, rng), v = fx::random_exponent(ring, rng);
            const auto mu = m_polynomial(ring, u), mv = m_polynomial(ring, v);
            CHECK(mu.degree() < ring.size());
            for (Elem x = 0; x < ring.size(); ++x) CHECK(evaluate(ring, mu, x) == power(ring, x, u));
            CHECK(reduce_mod_universal(ring, poly_mul(ring, mu, mv)) == m_polynomial(ring, exp_add(ring, u, v)));
        }
    }
}

TEST_CASE("expansion in the basic polynomials") {
    std::mt19937 rng(42);
    for (const auto& name : kFields) {
        const auto& ring = *catalog_ring(name);
        const auto sp = special_exponents(ring);
        std::uniform_int_distribution<Elem> pick(0, ring.size() - 1);
        for (int t = 0; t < 10; ++t) {
            std::vector<Elem> coeffs(ring.size());
            for (auto& c : coeffs) c = pick(rng);
            const auto f = make_polynomial(coeffs);
            const auto c = expand_in_basic(ring, f);
            REQUIRE(c.size() == ring.size());
            FieldPolynomial sum;
            for (Elem y = 0; y < ring.size(); ++y)
                sum = poly_add(ring, sum, poly_mul(ring, make_polynomial({c[y]}), m_polynomial(ring, sp.s[y])));
            CHECK(sum == f);
        }
    }
    const auto& f3 = *catalog_ring("F3");
    CHECK_THROWS_AS(expand_in_basic(f3, make_polynomial({0, 0, 0, 1})), Error);
}

TEST_CASE("phase functions through interpolating polynomials") {
    // tr(prod_r m_{w(r)}(x_r)) agrees with the generalized-power form.
    std::mt19937 rng(43);
    for (const char* name : {"F3", "F4", "F5"}) {
        auto ring = catalog_ring(name);
        for (int t = 0; t < 10; ++t) {
            const auto h = fx::random_calibrated(ring, 2, rng);
            ConfigSpace space(*ring, 2);
            for (std::uint64_t i = 0; i < space.count(); ++i) {
                const auto x = space.decode(i);
                long long sum = 0;
                for (const auto& [edge, cal] : h.edges)
                    for (const auto& [w, value] : cal) {
                        Elem prod = ring->one();
                        for (const auto& [v, u] : w) prod = ring->mul(prod, evaluate(*ring, m_polynomial(*ring, u), x[v]));
                        sum += static_cast<long long>(value) * ring->trace(prod);
                    }
                CHECK(phase_function(h, x) == sum % ring->characteristic());
            }
        }
    }
}
