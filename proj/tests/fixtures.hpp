// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hgs/hgs.hpp"

namespace hgs::fixtures {

// Two-qubit states with sigma = a0 x0 + a1 x1 + x0 x1.
inline CalibratedHypergraph bell(Scalar a0, Scalar a1) {
    auto f2 = catalog_ring("F2");
    const Exponent id = make_exponent(*f2, {1, 0});
    CalibratedHypergraph h{f2, 2, {}};
    const Edge x{0, 1};
    h.add_edge(x);
    h.add(x, make_expfn({{0, id}}), a0);
    h.add(x, make_expfn({{1, id}}), a1);
    h.add(x, make_expfn({{0, id}, {1, id}}), 1);
    return h;
}

// Expected signs, computational basis order 00 01 10 11.
inline std::array<int, 4> bell_signs(Scalar a0, Scalar a1) {
    static const std::array<std::array<int, 4>, 4> table{{
        {1, 1, 1, -1},
        {1, -1, 1, 1},
        {1, 1, -1, 1},
        {1, -1, -1, -1},
    }};
    return table[a0 * 2 + a1];
}

// Qutrit edges X0..X3 and their calibrations.
inline Edge qutrit_edge(int k) {
    static const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}};
    return edges.at(k);
}

inline void add_qutrit_edge(CalibratedHypergraph& h, int k) {
    const auto& f3 = *h.ring;
    const Exponent c = make_exponent(f3, {0, 0, 1});  // x -> 1, 1, 2
    const Exponent id = make_exponent(f3, {1, 0, 1});  // x -> x
    const Edge x = qutrit_edge(k);
    h.add_edge(x);
    switch (k) {
        case 0:
            h.add(x, make_expfn({{0, c}, {1, id}}), 1);
            h.add(x, make_expfn({{1, id}}), 2);
            break;
        case 1:
            h.add(x, make_expfn({{1, c}, {2, id}}), 1);
            h.add(x, make_expfn({{2, id}}), 2);
            break;
        case 2:
            h.add(x, make_expfn({{0, id}, {2, c}}), 1);
            h.add(x, make_expfn({{0, id}}), 2);
            break;
        default:
            h.add(x, make_expfn({{0, c}, {1, c}, {2, id}}), 1);
            h.add(x, make_expfn({{1, c}, {2, id}}), 2);
            h.add(x, make_expfn({{0, c}, {2, id}}), 2);
            h.add(x, make_expfn({{2, id}}), 1);
            break;
    }
}

inline const std::vector<std::string>& qutrit_labels() {
    static const std::vector<std::string> labels{"a", "b", "c", "d", "e"};
    return labels;
}

inline std::vector<int> qutrit_edges(int which) {
    static const std::vector<std::vector<int>> sets{{3}, {0, 1}, {0, 1, 2}, {0, 1, 3}, {0, 1, 2, 3}};
    return sets.at(which);
}

inline CalibratedHypergraph qutrit(int which) {
    CalibratedHypergraph h{catalog_ring("F3"), 3, {}};
    for (int k : qutrit_edges(which)) add_qutrit_edge(h, k);
    return h;
}

inline MarkedHypergraph qutrit_marked(int which) {
    static const std::vector<Vertex> targets{1, 2, 0, 2};
    MarkedHypergraph h{catalog_ring("F3"), 3, {}};
    for (int k : qutrit_edges(which)) h.targets[qutrit_edge(k)] = targets[k];
    return h;
}

using Sigma3 = std::function<int(int, int, int)>;

// Phase functions in the generalized-power form, c(x) = x^(0,0,1).
inline Sigma3 qutrit_sigma_powers(int which) {
    auto c = [](int x) { return x == 2 ? 2 : 1; };
    switch (which) {
        case 0:
            return [c](int x0, int x1, int x2) {
                return c(x0) * c(x1) * x2 + 2 * c(x0) * x2 + 2 * c(x1) * x2 + x2;
            };
        case 1:
            return [c](int x0, int x1, int x2) { return c(x0) * x1 + c(x1) * x2 + 2 * x1 + 2 * x2; };
        case 2:
            return [c](int x0, int x1, int x2) {
                return c(x0) * x1 + c(x1) * x2 + c(x2) * x0 + 2 * x1 + 2 * x2 + 2 * x0;
            };
        case 3:
            return [c](int x0, int x1, int x2) {
                return c(x0) * c(x1) * x2 + c(x0) * x1 + 2 * c(x0) * x2 + 2 * x1;
            };
        default:
            return [c](int x0, int x1, int x2) {
                return c(x0) * c(x1) * x2 + c(x0) * x1 + x0 * c(x2) + 2 * c(x0) * x2 + 2 * x0 +
                       2 * x1;
            };
    }
}

// The same functions in ordinary polynomial form, with g(x) = x + 2x^2.
inline Sigma3 qutrit_sigma_poly(int which) {
    auto g = [](int x) { return x + 2 * x * x; };
    switch (which) {
        case 0:
            return [g](int x0, int x1, int x2) { return g(x0) * g(x1) * x2; };
        case 1:
            return [g](int x0, int x1, int x2) { return g(x0) * x1 + g(x1) * x2; };
        case 2:
            return [g](int x0, int x1, int x2) { return g(x0) * x1 + g(x1) * x2 + g(x2) * x0; };
        case 3:
            return [g](int x0, int x1, int x2) {
                return g(x0) * x1 + g(x1) * x2 + g(x0) * g(x1) * x2;
            };
        default:
            return [g](int x0, int x1, int x2) {
                return g(x0) * x1 + g(x1) * x2 + g(x2) * x0 + g(x0) * g(x1) * x2;
            };
    }
}

// Expanded kets: configurations with a nonzero exponent of omega.
inline std::vector<std::pair<std::string, int>> qutrit_ket_c() {
    return {{"021", 1}, {"022", 2}, {"102", 1}, {"112", 1}, {"121", 1},
            {"202", 2}, {"210", 1}, {"211", 1}, {"220", 2}};
}

inline std::vector<std::pair<std::string, int>> qutrit_ket_e() {
    auto v = qutrit_ket_c();
    v.emplace_back("221", 1);
    v.emplace_back("222", 2);
    return v;
}

// Effective forms. Keys use c = x^(0,0,1) and i = x^(1,0,1) per vertex.
struct KeySpec {
    std::vector<std::pair<Vertex, char>> parts;
    Scalar value;
};

inline CalibratedHypergraph qutrit_effective(int which) {
    auto f3 = catalog_ring("F3");
    const Exponent c = make_exponent(*f3, {0, 0, 1});
    const Exponent id = make_exponent(*f3, {1, 0, 1});
    static const std::vector<std::vector<KeySpec>> specs{
        {{{{2, 'i'}}, 1}, {{{1, 'c'}, {2, 'i'}}, 2}, {{{0, 'c'}, {2, 'i'}}, 2}, {{{0, 'c'}, {1, 'c'}, {2, 'i'}}, 1}},
        {{{{1, 'i'}}, 2}, {{{2, 'i'}}, 2}, {{{0, 'c'}, {1, 'i'}}, 1}, {{{1, 'c'}, {2, 'i'}}, 1}},
        {{{{0, 'i'}}, 2},
         {{{1, 'i'}}, 2},
         {{{2, 'i'}}, 2},
         {{{0, 'c'}, {1, 'i'}}, 1},
         {{{1, 'c'}, {2, 'i'}}, 1},
         {{{0, 'i'}, {2, 'c'}}, 1}},
        {{{{1, 'i'}}, 2}, {{{0, 'c'}, {1, 'i'}}, 1}, {{{0, 'c'}, {2, 'i'}}, 2}, {{{0, 'c'}, {1, 'c'}, {2, 'i'}}, 1}},
        {{{{0, 'i'}}, 2},
         {{{1, 'i'}}, 2},
         {{{0, 'c'}, {1, 'i'}}, 1},
         {{{0, 'i'}, {2, 'c'}}, 1},
         {{{0, 'c'}, {2, 'i'}}, 2},
         {{{0, 'c'}, {1, 'c'}, {2, 'i'}}, 1}},
    };
    CalibratedHypergraph h{f3, 3, {}};
    for (const auto& k : specs.at(which)) {
        std::vector<std::pair<Vertex, Exponent>> parts;
        std::vector<Vertex> vs;
        for (const auto& [v, kind] : k.parts) {
            parts.emplace_back(v, kind == 'c' ? c : id);
            vs.push_back(v);
        }
        h.add(make_edge(vs), make_expfn(std::move(parts)), k.value);
    }
    return h;
}

// Edge sets of the effective forms; Y0..Y6 = {0} {1} {2} {01} {12} {02} {012}.
inline std::vector<Edge> qutrit_effective_edges(int which) {
    static const std::vector<Edge> y{{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}, {0, 1, 2}};
    static const std::vector<std::vector<int>> sets{
        {2, 4, 5, 6}, {1, 2, 3, 4}, {0, 1, 2, 3, 4, 5}, {1, 3, 5, 6}, {0, 1, 3, 5, 6}};
    std::vector<Edge> out;
    for (int k : sets.at(which)) out.push_back(y[k]);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::uint64_t config_index_of(const std::string& digits) {
    std::uint64_t i = 0;
    for (char ch : digits) i = i * 3 + static_cast<std::uint64_t>(ch - '0');
    return i;
}

// Random generators for property tests.

inline Exponent random_exponent(const GaloisRing& ring, std::mt19937& rng) {
    std::vector<unsigned> dense(ring.size());
    for (Elem x = 0; x < ring.size(); ++x) {
        std::uniform_int_distribution<unsigned> d(0, monoid_size(ring, x) - 1);
        dense[x] = d(rng);
    }
    return make_exponent(ring, dense);
}

inline Edge random_edge(std::size_t l, std::mt19937& rng) {
    std::vector<Vertex> vs;
    while (vs.empty()) {
        for (Vertex v = 0; v < l; ++v)
            if (rng() & 1) vs.push_back(v);
    }
    return make_edge(vs);
}

// Up to max_edges edges, each with up to max_keys random keys.
inline CalibratedHypergraph random_calibrated(RingPtr ring, std::size_t l, std::mt19937& rng,
                                              int max_edges = 3, int max_keys = 3) {
    CalibratedHypergraph h{ring, l, {}};
    if (l == 0) return h;
    std::uniform_int_distribution<int> ne(0, max_edges), nk(1, max_keys);
    std::uniform_int_distribution<Scalar> val(1, ring->characteristic() - 1);
    const int edges = ne(rng);
    for (int e = 0; e < edges; ++e) {
        Edge x = random_edge(l, rng);
        h.add_edge(x);
        const int keys = nk(rng);
        for (int k = 0; k < keys; ++k) {
            std::vector<std::pair<Vertex, Exponent>> parts;
            for (Vertex v : x)
                if (rng() % 3) parts.emplace_back(v, random_exponent(*ring, rng));
            h.add(x, make_expfn(std::move(parts)), val(rng));
        }
    }
    return h;
}

inline OrdinalMorphism random_morphism(std::size_t l, std::size_t m, std::mt19937& rng) {
    std::vector<Vertex> values(l);
    if (l == 0) return OrdinalMorphism::from_values(m, {});
    std::uniform_int_distribution<Vertex> d(0, static_cast<Vertex>(m - 1));
    for (auto& v : values) v = d(rng);
    return OrdinalMorphism::from_values(m, values);
}

inline OrdinalMorphism random_permutation(std::size_t l, std::mt19937& rng) {
    std::vector<Vertex> values(l);
    for (std::size_t i = 0; i < l; ++i) values[i] = static_cast<Vertex>(i);
    std::shuffle(values.begin(), values.end(), rng);
    return OrdinalMorphism::from_values(l, values);
}

inline Config random_config(const GaloisRing& ring, std::size_t l, std::mt19937& rng) {
    std::uniform_int_distribution<Elem> d(0, ring.size() - 1);
    Config x(l);
    for (auto& v : x) v = d(rng);
    return x;
}

}  // namespace hgs::fixtures
