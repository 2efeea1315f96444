// SPDX-License-Identifier: MIT
#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "hgs/hgs.hpp"
#include "hgs/io.hpp"

namespace py = pybind11;
using namespace hgs;

namespace {

struct Ring {
    RingPtr ptr;
    const GaloisRing& operator*() const { return *ptr; }
};

struct Hypergraph {
    CalibratedHypergraph h;
};

Elem check_elem(const Ring& r, long long a) {
    if (a < 0 || a >= static_cast<long long>(r.ptr->size())) throw py::index_error("element index out of range");
    return static_cast<Elem>(a);
}

Config to_config(const Hypergraph& g, const std::vector<long long>& x) {
    if (x.size() != g.h.l) throw Error("GradeMismatch", "configuration length differs from l");
    Config c;
    for (long long v : x) c.push_back(check_elem(Ring{g.h.ring}, v));
    return c;
}

py::dict state_dict(const FlatState& psi) {
    py::dict d;
    d["l"] = psi.l;
    d["basis"] = basis_name(psi.basis);
    d["norm_exp"] = psi.norm_exp;
    d["phases"] = psi.phases;
    return d;
}

Hypergraph parse(const std::string& text) { return {calibrated_from_json(Json::parse(text))}; }

}  // namespace

PYBIND11_MODULE(_hgs, m) {
    m.doc() = "Calibrated hypergraph states over Galois rings";

    static py::exception<Error> hgs_error(m, "HgsError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object err = hgs_error;
            py::object inst = err(e.what());
            inst.attr("code") = e.code();
            PyErr_SetObject(err.ptr(), inst.ptr());
        } catch (const nlohmann::json::exception& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<Ring>(m, "Ring")
        .def(py::init([](int p, int r, int d, std::vector<int> modulus) {
                 return Ring{GaloisRing::make(p, r, d, std::move(modulus))};
             }),
             py::arg("p"), py::arg("r"), py::arg("d"), py::arg("modulus"))
        .def_static("catalog", [](const std::string& name) { return Ring{catalog_ring(name)}; })
        .def_property_readonly("p", [](const Ring& r) { return r.ptr->p(); })
        .def_property_readonly("r", [](const Ring& r) { return r.ptr->r(); })
        .def_property_readonly("d", [](const Ring& r) { return r.ptr->d(); })
        .def_property_readonly("q", [](const Ring& r) { return r.ptr->size(); })
        .def_property_readonly("characteristic", [](const Ring& r) { return r.ptr->characteristic(); })
        .def_property_readonly("modulus", [](const Ring& r) { return r.ptr->modulus(); })
        .def("add", [](const Ring& r, long long a, long long b) { return r.ptr->add(check_elem(r, a), check_elem(r, b)); })
        .def("mul", [](const Ring& r, long long a, long long b) { return r.ptr->mul(check_elem(r, a), check_elem(r, b)); })
        .def("neg", [](const Ring& r, long long a) { return r.ptr->neg(check_elem(r, a)); })
        .def("pow", [](const Ring& r, long long a, std::uint64_t k) { return r.ptr->pow(check_elem(r, a), k); })
        .def("trace", [](const Ring& r, long long a) { return r.ptr->trace(check_elem(r, a)); })
        .def("is_unit", [](const Ring& r, long long a) { return r.ptr->is_unit(check_elem(r, a)); })
        .def("iota", [](const Ring& r, long long a) { return r.ptr->iota(check_elem(r, a)); })
        .def("period", [](const Ring& r, long long a) { return r.ptr->period(check_elem(r, a)); })
        .def("coeffs", [](const Ring& r, long long a) { return r.ptr->element(check_elem(r, a)).coeffs; })
        .def("index_of", [](const Ring& r, const std::vector<int>& c) { return r.ptr->index_of(c); })
        .def("to_string", [](const Ring& r, long long a) { return r.ptr->to_string(check_elem(r, a)); })
        .def("to_json", [](const Ring& r) { return ring_to_json(*r.ptr).dump(); })
        .def("__eq__", [](const Ring& a, const Ring& b) { return a.ptr->same_as(*b.ptr); })
        .def("__repr__", [](const Ring& r) {
            std::ostringstream os;
            os << "Ring(p=" << r.ptr->p() << ", r=" << r.ptr->r() << ", d=" << r.ptr->d() << ")";
            return os.str();
        });

    m.def("catalog_names", &catalog_names);

    py::class_<Hypergraph>(m, "Hypergraph")
        .def_static("from_json", &parse, py::arg("text"))
        .def_static("empty", [](const Ring& r, std::size_t l) { return Hypergraph{{r.ptr, l, {}}}; })
        .def("to_json", [](const Hypergraph& g) { return calibrated_to_json(g.h).dump(); })
        .def_property_readonly("l", [](const Hypergraph& g) { return g.h.l; })
        .def_property_readonly("ring", [](const Hypergraph& g) { return Ring{g.h.ring}; })
        .def_property_readonly("edges", [](const Hypergraph& g) {
            std::vector<Edge> out;
            for (const auto& e : g.h.edges) out.push_back(e.first);
            return out;
        })
        .def("phase", [](const Hypergraph& g, const std::vector<long long>& x) { return phase_function(g.h, to_config(g, x)); })
        .def("phase_table", [](const Hypergraph& g) { return phase_table(g.h); })
        .def("state", [](const Hypergraph& g) { return state_dict(build_state(g.h)); })
        .def("amplitudes", [](const Hypergraph& g) {
            const std::uint64_t n = ConfigSpace(*g.h.ring, g.h.l).count();
            if (n > dense_cap(1u << 16)) throw Error("TooLarge", "dense amplitudes above cap");
            return to_dense(build_state(g.h)).amplitudes;
        })
        .def("stabilizer_suite", [](const Hypergraph& g) {
            std::vector<std::tuple<std::string, std::size_t, std::size_t>> out;
            for (const auto& line : stabilizer_suite(g.h)) out.emplace_back(line.name, line.passed, line.total);
            return out;
        })
        .def("lme", [](const Hypergraph& g) { return lme_check(g.h).passed(); })
        .def("is_effective", [](const Hypergraph& g) { return is_effective(g.h); })
        .def("effectivize", [](const Hypergraph& g) {
            auto e = effectivize(g.h);
            return py::make_tuple(Hypergraph{e.hypergraph}, e.constant);
        })
        .def("primitive_core", [](const Hypergraph& g) {
            auto c = primitive_core(g.h);
            return py::make_tuple(c.chart.values, Hypergraph{c.core});
        })
        .def("congruent", [](const Hypergraph& a, const Hypergraph& b) -> std::optional<std::vector<Vertex>> {
            if (auto f = congruent(a.h, b.h)) return f->values;
            return std::nullopt;
        })
        .def("isotropy", [](const Hypergraph& g) {
            std::vector<std::vector<Vertex>> out;
            for (const auto& f : isotropy_group(g.h)) out.push_back(f.values);
            return out;
        })
        .def("apply_morphism", [](const Hypergraph& g, std::size_t target, const std::vector<Vertex>& values) {
            return Hypergraph{apply_morphism(OrdinalMorphism::from_values(target, values), g.h)};
        }, py::arg("target"), py::arg("values"))
        .def("covariant", [](const Hypergraph& g, std::size_t target, const std::vector<Vertex>& values) {
            return check_covariance(g.h, OrdinalMorphism::from_values(target, values));
        }, py::arg("target"), py::arg("values"))
        .def("product", [](const Hypergraph& a, const Hypergraph& b) { return Hypergraph{monadic_product(a.h, b.h)}; })
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a.h == b.h; })
        .def("__repr__", [](const Hypergraph& g) {
            std::ostringstream os;
            os << "Hypergraph(l=" << g.h.l << ", edges=" << g.h.edges.size() << ")";
            return os.str();
        });

    m.def("from_weighted", [](const std::string& text) {
        return Hypergraph{weighted_to_calibrated(weighted_from_json(Json::parse(text)))};
    });
    m.def("from_marked", [](const std::string& text, std::optional<long long> xstar) {
        auto h = marked_from_json(Json::parse(text));
        Ring r{h.ring};
        return Hypergraph{marked_to_calibrated(h, xstar ? check_elem(r, *xstar) : default_xstar(*h.ring))};
    }, py::arg("text"), py::arg("xstar") = py::none());
    m.def("from_poly", [](const std::string& text) {
        return Hypergraph{poly_to_calibrated(poly_from_json(Json::parse(text)))};
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
