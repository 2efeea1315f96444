// SPDX-License-Identifier: MIT
#include "hgs/canonicalize.hpp"

#include <algorithm>
#include <set>

namespace hgs {

namespace {

Scalar reduce(long long v, int n) {
    long long m = v % n;
    return static_cast<Scalar>(m < 0 ? m + n : m);
}

void require_permutable(const CalibratedHypergraph& h) {
    if (h.l > kMaxPermutationSize)
        throw Error("TooLarge", "permutation search is limited to l <= " +
                                    std::to_string(kMaxPermutationSize));
}

}  // namespace

bool is_effective(const CalibratedHypergraph& h) {
    for (const auto& [x, cal] : h.edges) {
        if (cal.empty()) return false;
        for (const auto& entry : cal)
            if (expfn_support(entry.first) != x) return false;
    }
    return true;
}

bool is_primitive(const CalibratedHypergraph& h) { return support_index(h).index == h.l; }

Effective effectivize(const CalibratedHypergraph& h) {
    const auto& ring = *h.ring;
    Effective out{CalibratedHypergraph{h.ring, h.l, {}}, 0};
    long long constant = 0;
    for (const auto& [x, cal] : h.edges)
        for (const auto& [w, value] : cal) {
            if (w.empty()) {
                constant += static_cast<long long>(value) * ring.trace(ring.one());
                continue;
            }
            out.hypergraph.add(expfn_support(w), w, value);
        }
    std::erase_if(out.hypergraph.edges, [](const auto& e) { return e.second.empty(); });
    out.constant = reduce(constant, ring.characteristic());
    return out;
}

SupportIndex support_index(const CalibratedHypergraph& h) {
    std::set<Vertex> vs;
    for (const auto& entry : h.edges) vs.insert(entry.first.begin(), entry.first.end());
    SupportIndex out{Edge(vs.begin(), vs.end()), vs.size()};
    return out;
}

PrimitiveCore primitive_core(const CalibratedHypergraph& h) {
    if (!is_effective(h)) throw Error("NotEffective", "primitive core needs an effective hypergraph");
    const auto si = support_index(h);
    PrimitiveCore out{OrdinalMorphism::from_values(h.l, si.support), {h.ring, si.index, {}}};
    std::vector<Vertex> rank(h.l, 0);
    for (std::size_t i = 0; i < si.support.size(); ++i) rank[si.support[i]] = static_cast<Vertex>(i);
    for (const auto& [x, cal] : h.edges) {
        Edge y;
        for (Vertex v : x) y.push_back(rank[v]);
        auto& target = out.core.edges[y];
        for (const auto& [w, value] : cal) {
            ExpFn moved;
            for (const auto& [v, e] : w) moved.emplace_back(rank[v], e);
            target[moved] = value;
        }
    }
    return out;
}

std::optional<OrdinalMorphism> congruent(const CalibratedHypergraph& a, const CalibratedHypergraph& b) {
    if (!a.ring->same_as(*b.ring) || a.l != b.l) return std::nullopt;
    require_permutable(a);
    for (const auto& h : {&a, &b})
        if (!is_effective(*h) || !is_primitive(*h))
            throw Error("NotEffective", "congruence is defined on primitive effective hypergraphs");
    if (a.edges.size() != b.edges.size()) return std::nullopt;
    for (const auto& f : all_permutations(a.l))
        if (apply_morphism(f, a) == b) return f;
    return std::nullopt;
}

std::vector<OrdinalMorphism> isotropy_group(const CalibratedHypergraph& h) {
    require_permutable(h);
    std::vector<OrdinalMorphism> out;
    for (const auto& f : all_permutations(h.l))
        if (apply_morphism(f, h) == h) out.push_back(f);
    return out;
}

Scalar weighted_phase_function(const WeightedHypergraph& h, const Config& x) {
    const auto& ring = *h.ring;
    long long sum = 0;
    for (const auto& [edge, alpha] : h.weights) {
        Elem prod = ring.one();
        for (Vertex v : edge) prod = ring.mul(prod, x.at(v));
        sum += static_cast<long long>(alpha) * ring.trace(prod);
    }
    return reduce(sum, ring.characteristic());
}

CalibratedHypergraph weighted_to_calibrated(const WeightedHypergraph& h) {
    const auto special = special_exponents(*h.ring);
    CalibratedHypergraph out{h.ring, h.l, {}};
    for (const auto& [edge, alpha] : h.weights) {
        std::vector<std::pair<Vertex, Exponent>> key;
        for (Vertex v : edge) key.emplace_back(v, special.q_elem);
        out.add_edge(edge);
        out.add(edge, make_expfn(std::move(key)), alpha);
    }
    return out;
}

Scalar poly_phase_function(const PolyHypergraph& h, const Config& x) {
    const auto& ring = *h.ring;
    long long sum = 0;
    for (const auto& [edge, terms] : h.terms)
        for (const auto& [expo, coeff] : terms) {
            Elem prod = ring.one();
            for (std::size_t i = 0; i < edge.size(); ++i) prod = ring.mul(prod, ring.pow(x.at(edge[i]), expo[i]));
            sum += static_cast<long long>(coeff) * ring.trace(prod);
        }
    return reduce(sum, ring.characteristic());
}

CalibratedHypergraph poly_to_calibrated(const PolyHypergraph& h) {
    const auto& ring = *h.ring;
    const unsigned delta = special_exponents(ring).delta;
    CalibratedHypergraph out{h.ring, h.l, {}};
    for (const auto& [edge, terms] : h.terms) {
        out.add_edge(edge);
        for (const auto& [expo, coeff] : terms) {
            if (expo.size() != edge.size())
                throw Error("BadCalibration", "polynomial term needs one exponent per edge vertex");
            std::vector<std::pair<Vertex, Exponent>> key;
            for (std::size_t i = 0; i < edge.size(); ++i) {
                if (expo[i] > delta)
                    throw Error("ExponentOutOfRange", "polynomial exponent exceeds delta");
                std::vector<unsigned> dense(ring.size());
                for (Elem x = 0; x < ring.size(); ++x) dense[x] = h_x(ring, x, expo[i]);
                key.emplace_back(edge[i], make_exponent(ring, dense));
            }
            out.add(edge, make_expfn(std::move(key)), coeff);
        }
    }
    return out;
}

QubitWeighted qubit_to_weighted(const CalibratedHypergraph& h) {
    const auto& ring = *h.ring;
    if (!(ring.p() == 2 && ring.r() == 1 && ring.d() == 1))
        throw Error("NotBinaryField", "qubit collapse needs the field F_2");
    const auto eff = effectivize(h);
    QubitWeighted out{WeightedHypergraph{h.ring, h.l, {}}, eff.constant};
    // Over F_2 the only non-zero exponent is (1,0), so each effective edge
    // carries at most one key.
    for (const auto& [edge, cal] : eff.hypergraph.edges) {
        long long beta = 0;
        for (const auto& entry : cal) beta += entry.second;
        if (beta % 2) out.hypergraph.weights[edge] = 1;
    }
    return out;
}

}  // namespace hgs
