// SPDX-License-Identifier: MIT
#include "hgs/marked_cz.hpp"

#include <algorithm>

namespace hgs {

namespace {

void require_prime_field(const GaloisRing& ring) {
    if (!ring.is_prime_field()) throw Error("NotPrimeField", "controlled phases need r = d = 1");
}

void require_mark(const Edge& edge, Vertex target) {
    if (edge.size() < 2 || !std::binary_search(edge.begin(), edge.end(), target))
        throw Error("BadMark", "target must lie in an edge of at least two vertices");
}

}  // namespace

Elem default_xstar(const GaloisRing& ring) {
    require_prime_field(ring);
    return static_cast<Elem>(ring.p() - 1);
}

Scalar cz_phase(const GaloisRing& ring, const Edge& edge, Vertex target, Elem xstar, const Config& x) {
    require_prime_field(ring);
    require_mark(edge, target);
    for (Vertex v : edge)
        if (v != target && x.at(v) != xstar) return 0;
    return static_cast<Scalar>(x.at(target));
}

FieldPolynomial p_polynomial(const GaloisRing& ring, Elem xstar) {
    require_prime_field(ring);
    const auto inv = power_matrix_inverse(ring);
    std::vector<Elem> c;
    for (std::size_t k = 0; k < ring.size(); ++k) c.push_back(inv[k][xstar]);
    return make_polynomial(std::move(c));
}

Scalar cz_phase_polynomial(const GaloisRing& ring, const Edge& edge, Vertex target, Elem xstar,
                           const Config& x) {
    require_mark(edge, target);
    const auto p = p_polynomial(ring, xstar);
    Elem prod = x.at(target);
    for (Vertex v : edge)
        if (v != target) prod = ring.mul(prod, evaluate(ring, p, x.at(v)));
    return static_cast<Scalar>(prod);
}

Scalar marked_phase_function(const MarkedHypergraph& h, Elem xstar, const Config& x) {
    const auto& ring = *h.ring;
    long long sum = 0;
    for (const auto& [edge, target] : h.targets) sum += cz_phase(ring, edge, target, xstar, x);
    return static_cast<Scalar>(sum % ring.characteristic());
}

FlatState marked_state(const MarkedHypergraph& h, Elem xstar) {
    require_prime_field(*h.ring);
    h.validate();
    ConfigSpace space(*h.ring, h.l);
    FlatState out = uniform_state(h.ring, h.l);
    for (std::uint64_t i = 0; i < space.count(); ++i) out.phases[i] = marked_phase_function(h, xstar, space.decode(i));
    return out;
}

CalibratedHypergraph marked_to_calibrated(const MarkedHypergraph& h, Elem xstar) {
    const auto& ring = *h.ring;
    require_prime_field(ring);
    h.validate();
    const auto special = special_exponents(ring);
    const auto cinv = basic_power_matrix_inverse(ring);
    const std::size_t q = ring.size();
    CalibratedHypergraph out{h.ring, h.l, {}};
    for (const auto& [edge, target] : h.targets) {
        out.add_edge(edge);
        std::vector<Vertex> controls;
        for (Vertex v : edge)
            if (v != target) controls.push_back(v);
        // Every assignment control -> y of the basis index y.
        std::vector<Elem> ys(controls.size(), 0);
        while (true) {
            Elem value = ring.one();
            std::vector<std::pair<Vertex, Exponent>> key{{target, special.s_star}};
            for (std::size_t i = 0; i < controls.size(); ++i) {
                value = ring.mul(value, cinv[ys[i]][xstar]);
                key.emplace_back(controls[i], special.s[ys[i]]);
            }
            if (value != ring.zero()) out.add(edge, make_expfn(std::move(key)), static_cast<Scalar>(value));
            std::size_t pos = 0;
            while (pos < ys.size() && ++ys[pos] == q) ys[pos++] = 0;
            if (pos == ys.size()) break;
        }
    }
    return out;
}

}  // namespace hgs
