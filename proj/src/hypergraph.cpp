// SPDX-License-Identifier: MIT
#include "hgs/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace hgs {

OrdinalMorphism OrdinalMorphism::identity(std::size_t l) {
    OrdinalMorphism f{l, l, std::vector<Vertex>(l)};
    std::iota(f.values.begin(), f.values.end(), 0);
    return f;
}

OrdinalMorphism OrdinalMorphism::from_values(std::size_t target, std::vector<Vertex> values) {
    for (Vertex v : values)
        if (v >= target) throw Error("BadMorphism", "morphism value out of range");
    return OrdinalMorphism{values.size(), target, std::move(values)};
}

bool OrdinalMorphism::is_injective() const {
    std::vector<bool> hit(target, false);
    for (Vertex v : values) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

bool OrdinalMorphism::is_bijective() const { return source == target && is_injective(); }

bool OrdinalMorphism::is_increasing() const {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i - 1] >= values[i]) return false;
    return true;
}

OrdinalMorphism compose(const OrdinalMorphism& g, const OrdinalMorphism& f) {
    if (f.target != g.source) throw Error("SizeMismatch", "cannot compose morphisms");
    OrdinalMorphism h{f.source, g.target, {}};
    for (Vertex v : f.values) h.values.push_back(g(v));
    return h;
}

OrdinalMorphism inverse(const OrdinalMorphism& f) {
    if (!f.is_bijective()) throw Error("BadMorphism", "only bijections have inverses");
    OrdinalMorphism g{f.target, f.source, std::vector<Vertex>(f.source)};
    for (Vertex v = 0; v < f.source; ++v) g.values[f(v)] = v;
    return g;
}

OrdinalMorphism block_sum(const OrdinalMorphism& f, const OrdinalMorphism& g) {
    OrdinalMorphism h{f.source + g.source, f.target + g.target, f.values};
    for (Vertex v : g.values) h.values.push_back(v + static_cast<Vertex>(f.target));
    return h;
}

std::vector<OrdinalMorphism> all_permutations(std::size_t l) {
    std::vector<OrdinalMorphism> out;
    auto f = OrdinalMorphism::identity(l);
    do {
        out.push_back(f);
    } while (std::next_permutation(f.values.begin(), f.values.end()));
    return out;
}

Edge make_edge(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (vertices.empty()) throw Error("EmptyEdge", "hyperedges must be non-empty");
    return vertices;
}

Edge image(const OrdinalMorphism& f, const Edge& x) {
    std::vector<Vertex> out;
    for (Vertex v : x) out.push_back(f(v));
    return make_edge(std::move(out));
}

ExpFn make_expfn(std::vector<std::pair<Vertex, Exponent>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i - 1].first == entries[i].first)
            throw Error("BadCalibration", "exponent function lists a vertex twice");
    std::erase_if(entries, [](const auto& e) { return e.second.is_zero(); });
    return entries;
}

const Exponent& expfn_at(const ExpFn& w, Vertex v) {
    static const Exponent zero;
    for (const auto& [u, e] : w)
        if (u == v) return e;
    return zero;
}

Edge expfn_support(const ExpFn& w) {
    Edge s;
    for (const auto& entry : w) s.push_back(entry.first);
    return s;
}

void CalibratedHypergraph::add(const Edge& x, const ExpFn& w, Scalar value) {
    auto& cal = edges[x];
    const int n = ring->characteristic();
    Scalar v = ((cal[w] + value) % n + n) % n;
    if (v == 0)
        cal.erase(w);
    else
        cal[w] = v;
}

void CalibratedHypergraph::validate() const {
    if (!ring) throw Error("BadHypergraph", "hypergraph has no ring");
    for (const auto& [x, cal] : edges) {
        if (x.empty()) throw Error("EmptyEdge", "hyperedges must be non-empty");
        if (!std::is_sorted(x.begin(), x.end()) ||
            std::adjacent_find(x.begin(), x.end()) != x.end())
            throw Error("BadHypergraph", "edge vertices must be sorted and distinct");
        if (x.back() >= l) throw Error("BadHypergraph", "edge vertex out of range");
        for (const auto& [w, value] : cal) {
            for (const auto& [v, e] : w) {
                if (!std::binary_search(x.begin(), x.end(), v))
                    throw Error("BadCalibration", "calibration key uses a vertex outside its edge");
                for (auto [elem, u] : e.comps)
                    if (elem >= ring->size() || u == 0 || u >= monoid_size(*ring, elem))
                        throw Error("BadCalibration", "exponent component out of range");
            }
            if (value <= 0 || value >= ring->characteristic())
                throw Error("BadCalibration", "stored calibration values must be in (0, p^r)");
        }
    }
}

bool CalibratedHypergraph::operator==(const CalibratedHypergraph& o) const {
    return ring->same_as(*o.ring) && l == o.l && edges == o.edges;
}

void MarkedHypergraph::validate() const {
    for (const auto& [x, target] : targets) {
        if (x.size() < 2) throw Error("BadMark", "marked edges need at least two vertices");
        if (!std::binary_search(x.begin(), x.end(), target))
            throw Error("BadMark", "target vertex must lie in its edge");
        if (x.back() >= l) throw Error("BadHypergraph", "edge vertex out of range");
    }
}

ExpFn exp_pushforward(const GaloisRing& ring, const OrdinalMorphism& f, const Edge& x,
                      const ExpFn& w) {
    for (const auto& entry : w)
        if (!std::binary_search(x.begin(), x.end(), entry.first))
            throw Error("DomainMismatch", "exponent function not defined on the edge");
    std::map<Vertex, Exponent> acc;
    for (const auto& [v, e] : w) {
        auto& slot = acc[f(v)];
        slot = exp_add(ring, slot, e);
    }
    std::vector<std::pair<Vertex, Exponent>> entries(acc.begin(), acc.end());
    return make_expfn(std::move(entries));
}

std::map<Edge, Calibration> calib_pushforward(const OrdinalMorphism& f,
                                              const CalibratedHypergraph& h) {
    CalibratedHypergraph out{h.ring, f.target, {}};
    for (const auto& [x, cal] : h.edges) {
        Edge y = image(f, x);
        out.add_edge(y);
        for (const auto& [w, value] : cal) out.add(y, exp_pushforward(*h.ring, f, x, w), value);
    }
    return out.edges;
}

CalibratedHypergraph apply_morphism(const OrdinalMorphism& f, const CalibratedHypergraph& h) {
    if (f.source != h.l) throw Error("SizeMismatch", "morphism source differs from vertex count");
    return CalibratedHypergraph{h.ring, f.target, calib_pushforward(f, h)};
}

CalibratedHypergraph monadic_product(const CalibratedHypergraph& a,
                                     const CalibratedHypergraph& b) {
    if (!a.ring->same_as(*b.ring)) throw Error("RingMismatch", "hypergraphs over different rings");
    CalibratedHypergraph out{a.ring, a.l + b.l, a.edges};
    const auto shift = static_cast<Vertex>(a.l);
    for (const auto& [x, cal] : b.edges) {
        Edge y;
        for (Vertex v : x) y.push_back(v + shift);
        auto& target = out.edges[y];
        for (const auto& [w, value] : cal) {
            ExpFn moved;
            for (const auto& [v, e] : w) moved.emplace_back(v + shift, e);
            target[moved] = value;
        }
    }
    return out;
}

CalibratedHypergraph empty_hypergraph(RingPtr ring, std::size_t l) {
    return CalibratedHypergraph{std::move(ring), l, {}};
}

}  // namespace hgs
