// SPDX-License-Identifier: MIT
#include "hgs/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace hgs {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("BadInput", what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

long long as_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) bad(what + " must be an integer");
    return j.get<long long>();
}

Scalar as_scalar(const GaloisRing& ring, const Json& j, const std::string& what) {
    long long v = as_int(j, what);
    if (v < 0 || v >= ring.characteristic()) bad(what + " must lie in [0, p^r)");
    return static_cast<Scalar>(v);
}

Edge edge_from_json(const Json& j, std::size_t l) {
    if (!j.is_array() || j.empty()) bad("\"vertices\" must be a non-empty array");
    std::vector<Vertex> vs;
    for (const auto& v : j) {
        long long x = as_int(v, "vertex");
        if (x < 0 || static_cast<std::size_t>(x) >= l) bad("vertex out of range");
        vs.push_back(static_cast<Vertex>(x));
    }
    Edge e = make_edge(vs);
    if (e.size() != vs.size()) bad("edge lists a vertex twice");
    return e;
}

std::size_t vertex_count(const Json& j) {
    long long l = as_int(field(j, "l"), "\"l\"");
    if (l < 0 || l > 64) bad("\"l\" must lie in [0, 64]");
    return static_cast<std::size_t>(l);
}

template <class F>
void for_each_edge(const Json& j, std::size_t l, F&& f) {
    const Json& edges = j.contains("edges") ? j.at("edges") : Json::array();
    if (!edges.is_array()) bad("\"edges\" must be an array");
    std::set<Edge> seen;
    for (const auto& e : edges) {
        Edge x = edge_from_json(field(e, "vertices"), l);
        if (!seen.insert(x).second) bad("duplicate edge");
        f(x, e);
    }
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        bad(path + ": " + e.what());
    }
}

RingPtr ring_from_json(const Json& j) {
    if (j.is_object() && j.contains("name") && !j.contains("p")) {
        if (!j.at("name").is_string()) bad("ring name must be a string");
        return catalog_ring(j.at("name").get<std::string>());
    }
    const int p = static_cast<int>(as_int(field(j, "p"), "\"p\""));
    const int r = static_cast<int>(as_int(field(j, "r"), "\"r\""));
    const int d = static_cast<int>(as_int(field(j, "d"), "\"d\""));
    const Json& m = field(j, "modulus");
    if (!m.is_array()) bad("\"modulus\" must be an array");
    std::vector<int> modulus;
    for (const auto& c : m) modulus.push_back(static_cast<int>(as_int(c, "modulus coefficient")));
    return GaloisRing::make(p, r, d, modulus);
}

Json ring_to_json(const GaloisRing& ring) {
    return Json{{"p", ring.p()}, {"r", ring.r()}, {"d", ring.d()}, {"modulus", ring.modulus()}};
}

Json element_to_json(const GaloisRing& ring, Elem a) { return ring.element(a).coeffs; }

Exponent exponent_from_json(const GaloisRing& ring, const Json& j) {
    if (!j.is_array() || j.size() != ring.size()) bad("exponent arrays need one entry per ring element");
    std::vector<unsigned> dense;
    for (const auto& v : j) {
        long long u = as_int(v, "exponent entry");
        if (u < 0) bad("exponent entries must be non-negative");
        dense.push_back(static_cast<unsigned>(u));
    }
    for (Elem x = 0; x < ring.size(); ++x)
        if (dense[x] >= monoid_size(ring, x))
            bad("exponent entry " + std::to_string(dense[x]) + " outside the monoid of element " +
                ring.to_string(x));
    return make_exponent(ring, dense);
}

CalibratedHypergraph calibrated_from_json(const Json& j) {
    CalibratedHypergraph h{ring_from_json(field(j, "ring")), vertex_count(j), {}};
    const auto& ring = *h.ring;
    for_each_edge(j, h.l, [&](const Edge& x, const Json& e) {
        h.add_edge(x);
        if (!e.contains("calibration")) return;
        const Json& cal = e.at("calibration");
        if (!cal.is_array()) bad("\"calibration\" must be an array");
        std::set<ExpFn> keys;
        for (const auto& entry : cal) {
            const Json& w = field(entry, "w");
            if (!w.is_object()) bad("\"w\" must map vertices to exponent arrays");
            std::vector<std::pair<Vertex, Exponent>> parts;
            for (const auto& [key, value] : w.items()) {
                long long v;
                try {
                    std::size_t used = 0;
                    v = std::stoll(key, &used);
                    if (used != key.size()) bad("bad vertex key " + key);
                } catch (const std::logic_error&) {
                    bad("bad vertex key " + key);
                }
                if (v < 0 || !std::binary_search(x.begin(), x.end(), static_cast<Vertex>(v)))
                    bad("calibration key uses vertex " + key + " outside its edge");
                parts.emplace_back(static_cast<Vertex>(v), exponent_from_json(ring, value));
            }
            ExpFn fn = make_expfn(std::move(parts));
            if (!keys.insert(fn).second) bad("calibration lists a key twice");
            h.add(x, fn, as_scalar(ring, field(entry, "value"), "\"value\""));
        }
    });
    h.validate();
    return h;
}

Json calibrated_to_json(const CalibratedHypergraph& h) {
    const auto& ring = *h.ring;
    Json edges = Json::array();
    for (const auto& [x, cal] : h.edges) {
        Json entries = Json::array();
        for (const auto& [w, value] : cal) {
            Json wj = Json::object();
            for (const auto& [v, e] : w) wj[std::to_string(v)] = dense_exponent(ring, e);
            entries.push_back(Json{{"w", wj}, {"value", value}});
        }
        edges.push_back(Json{{"vertices", x}, {"calibration", entries}});
    }
    return Json{{"ring", ring_to_json(ring)}, {"l", h.l}, {"edges", edges}};
}

WeightedHypergraph weighted_from_json(const Json& j) {
    WeightedHypergraph h{ring_from_json(field(j, "ring")), vertex_count(j), {}};
    for_each_edge(j, h.l, [&](const Edge& x, const Json& e) {
        h.weights[x] = as_scalar(*h.ring, field(e, "weight"), "\"weight\"");
    });
    return h;
}

Json weighted_to_json(const WeightedHypergraph& h) {
    Json edges = Json::array();
    for (const auto& [x, alpha] : h.weights) edges.push_back(Json{{"vertices", x}, {"weight", alpha}});
    return Json{{"ring", ring_to_json(*h.ring)}, {"l", h.l}, {"edges", edges}};
}

MarkedHypergraph marked_from_json(const Json& j) {
    MarkedHypergraph h{ring_from_json(field(j, "ring")), vertex_count(j), {}};
    for_each_edge(j, h.l, [&](const Edge& x, const Json& e) {
        long long t = as_int(field(e, "target"), "\"target\"");
        if (t < 0 || !std::binary_search(x.begin(), x.end(), static_cast<Vertex>(t)))
            bad("\"target\" must be a vertex of its edge");
        h.targets[x] = static_cast<Vertex>(t);
    });
    h.validate();
    return h;
}

PolyHypergraph poly_from_json(const Json& j) {
    PolyHypergraph h{ring_from_json(field(j, "ring")), vertex_count(j), {}};
    for_each_edge(j, h.l, [&](const Edge& x, const Json& e) {
        auto& terms = h.terms[x];
        const Json& tj = field(e, "terms");
        if (!tj.is_array()) bad("\"terms\" must be an array");
        for (const auto& t : tj) {
            const Json& ej = field(t, "exponents");
            if (!ej.is_array() || ej.size() != x.size()) bad("\"exponents\" needs one entry per edge vertex");
            std::vector<unsigned> expo;
            for (const auto& v : ej) {
                long long u = as_int(v, "exponent");
                if (u < 0) bad("exponents must be non-negative");
                expo.push_back(static_cast<unsigned>(u));
            }
            Scalar c = as_scalar(*h.ring, field(t, "coeff"), "\"coeff\"");
            terms[expo] = (terms[expo] + c) % h.ring->characteristic();
        }
    });
    return h;
}

Json morphism_to_json(const OrdinalMorphism& f) { return f.values; }

std::string config_to_string(const Config& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(x[i]);
    }
    return s + ")";
}

namespace {

std::string format_complex(Complex c) {
    char buf[80];
    auto clean = [](double v) { return std::abs(v) < 1e-15 ? 0.0 : v; };
    std::snprintf(buf, sizeof buf, "%.12g,%.12g", clean(c.real()), clean(c.imag()));
    return buf;
}

}  // namespace

Json state_to_json(const FlatState& psi, bool dense) {
    ConfigSpace space(*psi.ring, psi.l);
    Json entries = Json::array();
    DenseState d;
    if (dense) d = to_dense(psi);
    for (std::uint64_t i = 0; i < space.count(); ++i) {
        Json e{{"x", space.decode(i)}, {"phase", psi.phases[i]}};
        if (dense) e["amplitude"] = {d.amplitudes[i].real(), d.amplitudes[i].imag()};
        entries.push_back(e);
    }
    return Json{{"ring", ring_to_json(*psi.ring)},
                {"l", psi.l},
                {"basis", basis_name(psi.basis)},
                {"n", psi.norm_exp},
                {"entries", entries}};
}

std::string state_to_text(const FlatState& psi, bool dense) {
    ConfigSpace space(*psi.ring, psi.l);
    std::ostringstream os;
    os << "# basis=" << basis_name(psi.basis) << " l=" << psi.l << " n=" << psi.norm_exp
       << " omega=exp(2*pi*i/" << psi.ring->characteristic() << ")\n";
    DenseState d;
    if (dense) d = to_dense(psi);
    for (std::uint64_t i = 0; i < space.count(); ++i) {
        os << config_to_string(space.decode(i)) << ' ' << psi.phases[i];
        if (dense) os << ' ' << format_complex(d.amplitudes[i]);
        os << '\n';
    }
    return os.str();
}

}  // namespace hgs
