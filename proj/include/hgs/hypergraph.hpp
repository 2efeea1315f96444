// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hgs/cyclicity.hpp"

namespace hgs {

using Vertex = std::uint32_t;

// A map [source) -> [target).
struct OrdinalMorphism {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<Vertex> values;

    static OrdinalMorphism identity(std::size_t l);
    static OrdinalMorphism from_values(std::size_t target, std::vector<Vertex> values);

    Vertex operator()(Vertex v) const { return values.at(v); }
    bool is_injective() const;
    bool is_bijective() const;
    bool is_increasing() const;
    bool operator==(const OrdinalMorphism&) const = default;
};

// (g . f)(v) = g(f(v))
OrdinalMorphism compose(const OrdinalMorphism& g, const OrdinalMorphism& f);
OrdinalMorphism inverse(const OrdinalMorphism& f);
// f on the first block, g shifted on the second.
OrdinalMorphism block_sum(const OrdinalMorphism& f, const OrdinalMorphism& g);
// All permutations of [l] in lexicographic order of their value arrays.
std::vector<OrdinalMorphism> all_permutations(std::size_t l);

// Sorted non-empty vertex set.
using Edge = std::vector<Vertex>;

Edge make_edge(std::vector<Vertex> vertices);
Edge image(const OrdinalMorphism& f, const Edge& x);

// Calibration key: vertex -> exponent, sorted by vertex, zero exponents omitted.
using ExpFn = std::vector<std::pair<Vertex, Exponent>>;

ExpFn make_expfn(std::vector<std::pair<Vertex, Exponent>> entries);
const Exponent& expfn_at(const ExpFn& w, Vertex v);
Edge expfn_support(const ExpFn& w);

using Calibration = std::map<ExpFn, Scalar>;

struct CalibratedHypergraph {
    RingPtr ring;
    std::size_t l = 0;
    std::map<Edge, Calibration> edges;

    // Adds value to the calibration of key w on edge x, creating the edge.
    void add(const Edge& x, const ExpFn& w, Scalar value);
    void add_edge(const Edge& x) { edges.try_emplace(x); }
    void validate() const;
    bool operator==(const CalibratedHypergraph& o) const;
};

struct WeightedHypergraph {
    RingPtr ring;
    std::size_t l = 0;
    std::map<Edge, Scalar> weights;
};

struct MarkedHypergraph {
    RingPtr ring;
    std::size_t l = 0;
    std::map<Edge, Vertex> targets;

    void validate() const;
};

ExpFn exp_pushforward(const GaloisRing& ring, const OrdinalMorphism& f, const Edge& x,
                      const ExpFn& w);

std::map<Edge, Calibration> calib_pushforward(const OrdinalMorphism& f,
                                              const CalibratedHypergraph& h);

CalibratedHypergraph apply_morphism(const OrdinalMorphism& f, const CalibratedHypergraph& h);

CalibratedHypergraph monadic_product(const CalibratedHypergraph& a, const CalibratedHypergraph& b);

CalibratedHypergraph empty_hypergraph(RingPtr ring, std::size_t l = 0);

}  // namespace hgs
