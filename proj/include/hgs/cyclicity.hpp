// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "hgs/galois_ring.hpp"

namespace hgs {

// Sparse generalized exponent: (element index, component) pairs sorted by
// element, zero components omitted.
struct Exponent {
    std::vector<std::pair<Elem, unsigned>> comps;

    unsigned at(Elem x) const;
    bool is_zero() const { return comps.empty(); }
    auto operator<=>(const Exponent&) const = default;
};

struct IndexPeriod {
    unsigned iota;
    unsigned period;
    bool operator==(const IndexPeriod&) const = default;
};

IndexPeriod index_period(const GaloisRing& ring, Elem x);

// Size of the cyclic monoid attached to x, i.e. iota + period.
unsigned monoid_size(const GaloisRing& ring, Elem x);

unsigned h_x(const GaloisRing& ring, Elem x, unsigned long long u);
unsigned monoid_add(const GaloisRing& ring, Elem x, unsigned u, unsigned v);
unsigned embed(const GaloisRing& ring, Elem x, unsigned q_exp, unsigned u);

// Builds a canonical exponent from a dense per-element array.
Exponent make_exponent(const GaloisRing& ring, const std::vector<unsigned>& dense);
std::vector<unsigned> dense_exponent(const GaloisRing& ring, const Exponent& u);
Exponent single_exponent(const GaloisRing& ring, Elem x, unsigned u);

Exponent exp_add(const GaloisRing& ring, const Exponent& u, const Exponent& v);
Elem power(const GaloisRing& ring, Elem x, const Exponent& u);

struct SpecialExponents {
    std::vector<Exponent> s;  // s[y] for every element y
    Exponent s_star;
    Exponent q_elem;
    unsigned delta;
};

SpecialExponents special_exponents(const GaloisRing& ring);

}  // namespace hgs
