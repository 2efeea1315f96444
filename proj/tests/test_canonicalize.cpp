// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace hgs;
namespace fx = hgs::fixtures;

namespace {

const std::vector<std::string> kRings{"F2", "F3", "F4", "Z4", "GR42"};

bool same_phase_up_to(const CalibratedHypergraph& a, const CalibratedHypergraph& b, Scalar constant) {
    const auto ta = phase_table(a), tb = phase_table(b);
    const int n = a.ring->characteristic();
    for (std::size_t i = 0; i < ta.size(); ++i)
        if (ta[i] != (tb[i] + constant) % n) return false;
    return ta.size() == tb.size();
}

}  // namespace

TEST_CASE("effectiveness") {
    for (int w = 0; w < 5; ++w) {
        CHECK(is_effective(fx::qutrit_effective(w)));
        CHECK_FALSE(is_effective(fx::qutrit(w)));
    }
    CHECK(is_effective(empty_hypergraph(catalog_ring("F3"))));
    CalibratedHypergraph bare{catalog_ring("F3"), 2, {}};
    bare.add_edge(Edge{0, 1});
    CHECK_FALSE(is_effective(bare));
    CHECK(effectivize(bare).hypergraph.edges.empty());
}

TEST_CASE("effectivize collects the constant through tr(1)") {
    const std::vector<std::pair<std::string, Scalar>> cases{{"F3", 1}, {"F4", 0}, {"GR42", 2}, {"Z4", 1}};
    for (const auto& [name, constant] : cases) {
        CAPTURE(name);
        auto ring = catalog_ring(name);
        CalibratedHypergraph h{ring, 1, {}};
        h.add(Edge{0}, ExpFn{}, 1);
        const auto eff = effectivize(h);
        CHECK(eff.constant == constant);
        CHECK(eff.hypergraph.edges.empty());
    }
}

TEST_CASE("effectivize preserves the phase function") {
    std::mt19937 rng(31);
    for (const auto& name : kRings) {
        auto ring = catalog_ring(name);
        for (int t = 0; t < 20; ++t) {
            const std::size_t l = 1 + t % 3;
            if (std::pow(ring->size(), l) > 1024) continue;
            const auto h = fx::random_calibrated(ring, l, rng);
            const auto eff = effectivize(h);
            CHECK(is_effective(eff.hypergraph));
            CHECK(same_phase_up_to(h, eff.hypergraph, eff.constant));
            CHECK(effectivize(eff.hypergraph).hypergraph == eff.hypergraph);
            CHECK(effectivize(eff.hypergraph).constant == 0);
        }
    }
}

TEST_CASE("support index and primitive core") {
    auto f3 = catalog_ring("F3");
    const auto c = make_exponent(*f3, {0, 0, 1});
    CalibratedHypergraph h{f3, 5, {}};
    h.add(Edge{1, 3}, make_expfn({{1, c}, {3, c}}), 2);
    h.add(Edge{3}, make_expfn({{3, c}}), 1);
    const auto si = support_index(h);
    CHECK(si.support == Edge{1, 3});
    CHECK(si.index == 2);
    CHECK_FALSE(is_primitive(h));

    const auto pc = primitive_core(h);
    CHECK(pc.chart.values == std::vector<Vertex>{1, 3});
    CHECK(pc.chart.is_increasing());
    CHECK(pc.core.l == 2);
    CHECK(is_primitive(pc.core));
    CalibratedHypergraph want{f3, 2, {}};
    want.add(Edge{0, 1}, make_expfn({{0, c}, {1, c}}), 2);
    want.add(Edge{1}, make_expfn({{1, c}}), 1);
    CHECK(pc.core == want);
    CHECK(apply_morphism(pc.chart, pc.core) == h);

    const auto empty = primitive_core(CalibratedHypergraph{f3, 3, {}});
    CHECK(empty.core.l == 0);
    CHECK(empty.chart.source == 0);
    CHECK_THROWS_AS(primitive_core(fx::qutrit(0)), Error);

    std::mt19937 rng(32);
    for (int t = 0; t < 50; ++t) {
        const auto eff = effectivize(fx::random_calibrated(catalog_ring(kRings[t % 4]), 4, rng)).hypergraph;
        const auto core = primitive_core(eff);
        CHECK(apply_morphism(core.chart, core.core) == eff);
        CHECK(is_primitive(core.core));
    }
}

TEST_CASE("congruence") {
    const auto a = effectivize(fx::bell(1, 0)).hypergraph;
    const auto b = effectivize(fx::bell(0, 1)).hypergraph;
    const auto f = congruent(a, b);
    REQUIRE(f.has_value());
    CHECK(f->values == std::vector<Vertex>{1, 0});
    CHECK(congruent(a, a)->values == std::vector<Vertex>{0, 1});

    // b and d have the same edge count but are not related by a relabelling.
    CHECK_FALSE(congruent(fx::qutrit_effective(1), fx::qutrit_effective(3)).has_value());
    CHECK_FALSE(congruent(fx::qutrit_effective(0), fx::qutrit_effective(2)).has_value());
    CHECK_THROWS_AS(congruent(fx::qutrit(1), fx::qutrit(3)), Error);

    std::mt19937 rng(33);
    for (int t = 0; t < 30; ++t) {
        auto ring = catalog_ring(kRings[t % kRings.size()]);
        const auto h = effectivize(fx::random_calibrated(ring, 3, rng)).hypergraph;
        if (!is_primitive(h)) continue;
        const auto pi = fx::random_permutation(3, rng);
        const auto moved = apply_morphism(pi, h);
        const auto g = congruent(h, moved);
        REQUIRE(g.has_value());
        CHECK(apply_morphism(*g, h) == moved);
        CHECK(g->values <= pi.values);
    }

    CalibratedHypergraph big{catalog_ring("F2"), 7, {}};
    CHECK_THROWS_AS(isotropy_group(big), Error);
}

TEST_CASE("isotropy") {
    for (Scalar a = 0; a < 2; ++a) {
        const auto group = isotropy_group(fx::bell(a, a));
        REQUIRE(group.size() == 2);
        CHECK(group[0] == OrdinalMorphism::identity(2));
        CHECK(group[1].values == std::vector<Vertex>{1, 0});
    }
    const auto trivial = isotropy_group(fx::bell(1, 0));
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0] == OrdinalMorphism::identity(2));

    // Symmetric hypergraphs give permutation-invariant states.
    for (int w = 0; w < 5; ++w) {
        const auto h = fx::qutrit(w);
        const auto psi = build_state(h);
        for (const auto& f : isotropy_group(h)) CHECK(apply_he_morphism(f, psi) == psi);
    }
    CHECK(isotropy_group(fx::qutrit(2)).size() == 3);
}

TEST_CASE("weighted hypergraphs") {
    std::mt19937 rng(34);
    for (const auto& name : kRings) {
        auto ring = catalog_ring(name);
        std::uniform_int_distribution<Scalar> coeff(0, ring->characteristic() - 1);
        WeightedHypergraph w{ring, 2, {}};
        w.weights[Edge{0}] = coeff(rng);
        w.weights[Edge{0, 1}] = coeff(rng);
        w.weights[Edge{1}] = coeff(rng);
        const auto h = weighted_to_calibrated(w);
        ConfigSpace space(*ring, 2);
        for (std::uint64_t i = 0; i < space.count(); ++i)
            CHECK(phase_function(h, space.decode(i)) == weighted_phase_function(w, space.decode(i)));
    }

    auto f3 = catalog_ring("F3");
    WeightedHypergraph pair{f3, 2, {{Edge{0, 1}, 2}}};
    ConfigSpace space(*f3, 2);
    for (std::uint64_t i = 0; i < space.count(); ++i) {
        const auto x = space.decode(i);
        CHECK(weighted_phase_function(pair, x) == (2 * x[0] * x[1]) % 3);
    }
    WeightedHypergraph zero{f3, 2, {{Edge{0, 1}, 0}}};
    CHECK(effectivize(weighted_to_calibrated(zero)).hypergraph.edges.empty());
}

TEST_CASE("polynomial hypergraphs") {
    auto f3 = catalog_ring("F3");
    PolyHypergraph sq{f3, 1, {}};
    sq.terms[Edge{0}][{2}] = 1;
    const auto h = poly_to_calibrated(sq);
    const auto& cal = h.edges.at(Edge{0});
    REQUIRE(cal.size() == 1);
    CHECK(dense_exponent(*f3, expfn_at(cal.begin()->first, 0)) == std::vector<unsigned>{1, 0, 0});
    for (Elem x = 0; x < 3; ++x) CHECK(phase_function(h, Config{x}) == f3->trace(f3->mul(x, x)));

    // g(x) = x + 2x^2 is the indicator of x = 2.
    PolyHypergraph indicator{f3, 2, {}};
    indicator.terms[Edge{0, 1}][{1, 1}] = 1;
    indicator.terms[Edge{0, 1}][{2, 1}] = 2;
    const auto ih = poly_to_calibrated(indicator);
    ConfigSpace space(*f3, 2);
    for (std::uint64_t i = 0; i < space.count(); ++i) {
        const auto x = space.decode(i);
        CHECK(phase_function(ih, x) == poly_phase_function(indicator, x));
        CHECK(phase_function(ih, x) == (x[0] == 2 ? x[1] : 0));
    }

    PolyHypergraph bad{f3, 1, {}};
    bad.terms[Edge{0}][{3}] = 1;
    CHECK_THROWS_AS(poly_to_calibrated(bad), Error);
    PolyHypergraph ragged{f3, 2, {}};
    ragged.terms[Edge{0, 1}][{1}] = 1;
    CHECK_THROWS_AS(poly_to_calibrated(ragged), Error);

    PolyHypergraph nothing{f3, 2, {}};
    nothing.terms[Edge{0, 1}][{1, 1}] = 0;
    CHECK(effectivize(poly_to_calibrated(nothing)).hypergraph.edges.empty());

    std::mt19937 rng(35);
    for (const auto& name : kRings) {
        auto ring = catalog_ring(name);
        const unsigned delta = special_exponents(*ring).delta;
        std::uniform_int_distribution<unsigned> e(0, delta);
        std::uniform_int_distribution<Scalar> coeff(0, ring->characteristic() - 1);
        PolyHypergraph p{ring, 2, {}};
        for (int t = 0; t < 4; ++t) p.terms[Edge{0, 1}][{e(rng), e(rng)}] = coeff(rng);
        p.terms[Edge{1}][{e(rng)}] = coeff(rng);
        const auto c = poly_to_calibrated(p);
        ConfigSpace s(*ring, 2);
        for (std::uint64_t i = 0; i < s.count(); ++i)
            CHECK(phase_function(c, s.decode(i)) == poly_phase_function(p, s.decode(i)));
    }

    // All-ones exponents on F2 reproduce the weighted form.
    auto f2 = catalog_ring("F2");
    PolyHypergraph ones{f2, 2, {}};
    ones.terms[Edge{0, 1}][{1, 1}] = 1;
    CHECK(phase_table(poly_to_calibrated(ones)) ==
          phase_table(weighted_to_calibrated(WeightedHypergraph{f2, 2, {{Edge{0, 1}, 1}}})));
}

TEST_CASE("qubit collapse to weighted form") {
    for (Scalar a0 = 0; a0 < 2; ++a0)
        for (Scalar a1 = 0; a1 < 2; ++a1) {
            const auto h = fx::bell(a0, a1);
            const auto q = qubit_to_weighted(h);
            CHECK(q.constant == 0);
            CHECK(q.hypergraph.weights.at(Edge{0, 1}) == 1);
            CHECK(q.hypergraph.weights.count(Edge{0}) == a0);
            CHECK(q.hypergraph.weights.count(Edge{1}) == a1);
            CHECK(build_state(weighted_to_calibrated(q.hypergraph)) == build_state(h));
        }
    std::mt19937 rng(36);
    auto f2 = catalog_ring("F2");
    for (int t = 0; t < 20; ++t) {
        const auto h = fx::random_calibrated(f2, 3, rng);
        const auto q = qubit_to_weighted(h);
        CHECK(build_state(h) == shift_phase(build_state(weighted_to_calibrated(q.hypergraph)), q.constant));
    }
    CHECK_THROWS_AS(qubit_to_weighted(fx::qutrit(0)), Error);
}
