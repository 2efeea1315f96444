// SPDX-License-Identifier: MIT
#include "hgs/cyclicity.hpp"

#include <algorithm>

namespace hgs {

unsigned Exponent::at(Elem x) const {
    auto it = std::lower_bound(comps.begin(), comps.end(), std::make_pair(x, 0u));
    return (it != comps.end() && it->first == x) ? it->second : 0;
}

IndexPeriod index_period(const GaloisRing& ring, Elem x) { return {ring.iota(x), ring.period(x)}; }

unsigned monoid_size(const GaloisRing& ring, Elem x) { return ring.iota(x) + ring.period(x); }

unsigned h_x(const GaloisRing& ring, Elem x, unsigned long long u) {
    const unsigned iota = ring.iota(x), pi = ring.period(x);
    if (u < iota + pi) return static_cast<unsigned>(u);
    return iota + static_cast<unsigned>((u - iota) % pi);
}

unsigned monoid_add(const GaloisRing& ring, Elem x, unsigned u, unsigned v) {
    const unsigned size = monoid_size(ring, x);
    if (u >= size || v >= size) throw Error("OutOfRange", "monoid operand exceeds iota+period");
    return h_x(ring, x, static_cast<unsigned long long>(u) + v);
}

unsigned embed(const GaloisRing& ring, Elem x, unsigned q_exp, unsigned u) {
    if (u >= monoid_size(ring, ring.pow(x, q_exp)))
        throw Error("OutOfRange", "exponent outside the monoid of x^q");
    return h_x(ring, x, static_cast<unsigned long long>(q_exp) * u);
}

Exponent make_exponent(const GaloisRing& ring, const std::vector<unsigned>& dense) {
    if (dense.size() != ring.size())
        throw Error("BadExponent", "dense exponent needs one entry per ring element");
    Exponent u;
    for (Elem x = 0; x < ring.size(); ++x) {
        unsigned v = h_x(ring, x, dense[x]);
        if (v) u.comps.emplace_back(x, v);
    }
    return u;
}

std::vector<unsigned> dense_exponent(const GaloisRing& ring, const Exponent& u) {
    std::vector<unsigned> dense(ring.size(), 0);
    for (auto [x, v] : u.comps) dense[x] = v;
    return dense;
}

Exponent single_exponent(const GaloisRing& ring, Elem x, unsigned u) {
    Exponent e;
    unsigned v = h_x(ring, x, u);
    if (v) e.comps.emplace_back(x, v);
    return e;
}

Exponent exp_add(const GaloisRing& ring, const Exponent& u, const Exponent& v) {
    Exponent out;
    auto a = u.comps.begin(), b = v.comps.begin();
    while (a != u.comps.end() || b != v.comps.end()) {
        Elem x;
        unsigned s;
        if (b == v.comps.end() || (a != u.comps.end() && a->first < b->first)) {
            x = a->first;
            s = a->second;
            ++a;
        } else if (a == u.comps.end() || b->first < a->first) {
            x = b->first;
            s = b->second;
            ++b;
        } else {
            x = a->first;
            s = monoid_add(ring, x, a->second, b->second);
            ++a;
            ++b;
        }
        if (s) out.comps.emplace_back(x, s);
    }
    return out;
}

Elem power(const GaloisRing& ring, Elem x, const Exponent& u) { return ring.pow(x, u.at(x)); }

SpecialExponents special_exponents(const GaloisRing& ring) {
    SpecialExponents out;
    out.delta = 0;
    for (Elem y = 0; y < ring.size(); ++y) {
        out.s.push_back(y == ring.one() ? Exponent{} : single_exponent(ring, y, 1));
        out.s_star = exp_add(ring, out.s_star, out.s.back());
        if (y != ring.one()) out.q_elem.comps.emplace_back(y, h_x(ring, y, 1));
        out.delta = std::max(out.delta, monoid_size(ring, y));
    }
    std::erase_if(out.q_elem.comps, [](const auto& c) { return c.second == 0; });
    return out;
}

}  // namespace hgs
