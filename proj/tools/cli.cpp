// SPDX-License-Identifier: MIT
#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "hgs/hgs.hpp"

namespace hgs {

namespace {

struct CheckFailed {};

struct Output {
    std::ostream& out;
    bool json;
};

std::string format_error(double e) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", e);
    return buf;
}

std::string matrix_text(const GaloisRing& ring, const ElemMatrix& m) {
    std::ostringstream os;
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << ring.to_string(row[j]);
        os << '\n';
    }
    return os.str();
}

Json matrix_json(const GaloisRing& ring, const ElemMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (Elem e : row) r.push_back(element_to_json(ring, e));
        rows.push_back(r);
    }
    return rows;
}

std::string poly_text(const GaloisRing& ring, const FieldPolynomial& f) {
    if (f.coeffs.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
        if (f.coeffs[k] == ring.zero()) continue;
        if (!s.empty()) s += " + ";
        std::string c = ring.to_string(f.coeffs[k]);
        if (c.find('+') != std::string::npos && k > 0) c = "(" + c + ")";
        if (k == 0) {
            s += c;
        } else {
            if (c != "1") s += c;
            s += "x";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

int cmd_ring_info(const Output& o, const std::string& path) {
    auto ring = ring_from_json(load_json_file(path));
    const auto& R = *ring;
    if (o.json) {
        Json elems = Json::array(), units = Json::array(), nil = Json::array();
        for (Elem a = 0; a < R.size(); ++a) {
            elems.push_back(Json{{"index", a},
                                 {"coeffs", element_to_json(R, a)},
                                 {"trace", R.trace(a)},
                                 {"unit", R.is_unit(a)},
                                 {"iota", R.iota(a)},
                                 {"period", R.period(a)}});
            (R.is_unit(a) ? units : nil).push_back(a);
        }
        Json j{{"ring", ring_to_json(R)},       {"q", R.size()},  {"characteristic", R.characteristic()},
               {"elements", elems},              {"units", units}, {"nilpotents", nil}};
        if (R.primitive_theta()) j["primitive_theta"] = element_to_json(R, *R.primitive_theta());
        o.out << j.dump(2) << '\n';
        return 0;
    }
    o.out << "p=" << R.p() << " r=" << R.r() << " d=" << R.d() << " q=" << R.size()
          << " modulus=" << ring_to_json(R)["modulus"].dump() << '\n';
    if (R.primitive_theta()) o.out << "primitive element: " << R.to_string(*R.primitive_theta()) << '\n';
    o.out << "index element trace kind iota period\n";
    std::size_t units = 0;
    for (Elem a = 0; a < R.size(); ++a) {
        units += R.is_unit(a);
        o.out << a << ' ' << R.to_string(a) << ' ' << R.trace(a) << ' '
              << (R.is_unit(a) ? "unit" : "nilpotent") << ' ' << R.iota(a) << ' ' << R.period(a) << '\n';
    }
    o.out << "units=" << units << " nilpotents=" << R.size() - units << '\n';
    return 0;
}

int cmd_state_build(const Output& o, const std::string& path, bool dense) {
    auto h = calibrated_from_json(load_json_file(path));
    auto psi = build_state(h);
    if (o.json)
        o.out << state_to_json(psi, dense).dump(2) << '\n';
    else
        o.out << state_to_text(psi, dense);
    return 0;
}

std::vector<OrdinalMorphism> sample_morphisms(std::size_t l, std::size_t limit) {
    std::vector<OrdinalMorphism> out;
    std::mt19937 rng(1);
    const std::size_t lo = l == 0 ? 0 : 1;
    for (std::size_t m = lo; m <= l + 1; ++m) {
        double total = std::pow(static_cast<double>(m), static_cast<double>(l));
        if (total <= static_cast<double>(limit)) {
            std::vector<Vertex> v(l, 0);
            while (true) {
                out.push_back(OrdinalMorphism::from_values(m, v));
                std::size_t pos = 0;
                while (pos < l && ++v[pos] == m) v[pos++] = 0;
                if (pos == l) break;
            }
        } else {
            for (std::size_t k = 0; k < limit; ++k) {
                std::vector<Vertex> v(l);
                for (auto& x : v) x = static_cast<Vertex>(rng() % m);
                out.push_back(OrdinalMorphism::from_values(m, v));
            }
        }
    }
    return out;
}

struct VerifyFlags {
    bool stabilizer = false, covariance = false, lme = false, pushforward = false;
};

int cmd_state_verify(const Output& o, const std::string& path, VerifyFlags flags) {
    auto h = calibrated_from_json(load_json_file(path));
    if (!flags.stabilizer && !flags.covariance && !flags.lme && !flags.pushforward)
        flags = {true, true, true, true};
    bool all_ok = true;
    Json report = Json::array();
    auto emit = [&](const std::string& suite, const std::string& name, std::size_t passed, std::size_t total,
                    const std::string& extra = "") {
        const bool ok = passed == total;
        all_ok = all_ok && ok;
        report.push_back(Json{{"suite", suite}, {"check", name}, {"passed", passed}, {"total", total}, {"ok", ok}});
        if (!o.json) o.out << passed << '/' << total << ' ' << name << " checks passed" << extra << '\n';
    };
    auto emit_skip = [&](const std::string& suite, const std::string& name, const std::string& why) {
        report.push_back(Json{{"suite", suite}, {"check", name}, {"skipped", why}});
        if (!o.json) o.out << name << ": skipped (" << why << ")\n";
    };

    if (flags.stabilizer) {
        const std::uint64_t n = ConfigSpace(*h.ring, h.l).count();
        if (n > 729) {
            emit_skip("stabilizer", "stabilizer", "q^l above 729");
        } else {
            for (const auto& line : stabilizer_suite(h)) emit("stabilizer", line.name, line.passed, line.total);
        }
    }
    if (flags.covariance) {
        std::size_t passed = 0, total = 0;
        for (const auto& f : sample_morphisms(h.l, 256)) {
            if (ConfigSpace(*h.ring, f.target).count() > (1u << 16)) continue;
            ++total;
            passed += check_covariance(h, f);
        }
        emit("covariance", "covariance", passed, total);
        const bool mono = build_state(monadic_product(h, h)) == tensor(build_state(h), build_state(h));
        emit("covariance", "monadicity", mono ? 1 : 0, 1);
    }
    if (flags.lme) {
        const auto rep = lme_check(h);
        emit("lme", "lme orthonormality", rep.orthonormal ? 1 : 0, 1);
        if (rep.reduced)
            emit("lme", "lme reduced density", rep.reduced->passed ? 1 : 0, 1,
                 " (max error " + format_error(rep.reduced->max_error) + ")");
        else
            emit_skip("lme", "lme reduced density", "q^{2l} above cap");
    }
    if (flags.pushforward) {
        std::vector<std::pair<std::string, OrdinalMorphism>> maps{{"identity", OrdinalMorphism::identity(h.l)}};
        if (h.l >= 2) {
            auto swap = OrdinalMorphism::identity(h.l);
            std::swap(swap.values[0], swap.values[1]);
            maps.emplace_back("swap", swap);
            std::vector<Vertex> merge(h.l);
            for (std::size_t i = 0; i < h.l; ++i) merge[i] = static_cast<Vertex>(std::min(i, h.l - 2));
            maps.emplace_back("merge", OrdinalMorphism::from_values(h.l - 1, merge));
        }
        std::vector<Vertex> grow(h.l);
        for (std::size_t i = 0; i < h.l; ++i) grow[i] = static_cast<Vertex>(i);
        maps.emplace_back("embed", OrdinalMorphism::from_values(h.l + 1, grow));
        for (const auto& [name, f] : maps) {
            try {
                const auto res = check_stabilizer_pushforward(h, f);
                emit("pushforward", "pushforward " + name, res.passed ? 1 : 0, 1,
                     " (max error " + format_error(res.max_error) + ")");
            } catch (const Error& e) {
                if (e.code() != "TooLarge") throw;
                emit_skip("pushforward", "pushforward " + name, "dense size above cap");
            }
        }
    }
    if (o.json) o.out << Json{{"ok", all_ok}, {"checks", report}}.dump(2) << '\n';
    return all_ok ? 0 : 2;
}

Json reduce_json(const CalibratedHypergraph& h) {
    const auto eff = effectivize(h);
    const auto core = primitive_core(eff.hypergraph);
    return Json{{"constant", eff.constant},
                {"effective", calibrated_to_json(eff.hypergraph)},
                {"chart", morphism_to_json(core.chart)},
                {"core", calibrated_to_json(core.core)}};
}

int cmd_reduce(const Output& o, const std::string& path) {
    auto h = calibrated_from_json(load_json_file(path));
    o.out << reduce_json(h).dump(2) << '\n';
    return 0;
}

int cmd_classify(const Output& o, const std::string& dir, std::size_t max_l) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw Error("BadInput", dir + " is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    struct Member {
        std::string file;
        OrdinalMorphism witness;
    };
    struct Class {
        CalibratedHypergraph core;
        std::vector<Member> members;
    };
    std::vector<Class> classes;
    for (const auto& path : files) {
        auto h = calibrated_from_json(load_json_file(path.string()));
        auto core = primitive_core(effectivize(h).hypergraph).core;
        if (core.l > max_l || core.l > kMaxPermutationSize)
            throw Error("TooLarge", path.filename().string() + " has a core with " + std::to_string(core.l) +
                                        " vertices, above --max-l");
        bool placed = false;
        for (auto& c : classes) {
            if (!c.core.ring->same_as(*core.ring) || c.core.l != core.l) continue;
            if (auto f = congruent(c.core, core)) {
                c.members.push_back({path.filename().string(), *f});
                placed = true;
                break;
            }
        }
        if (!placed)
            classes.push_back({core, {{path.filename().string(), OrdinalMorphism::identity(core.l)}}});
    }

    Json out = Json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& c = classes[i];
        const auto iso = isotropy_group(c.core);
        if (o.json) {
            Json members = Json::array(), group = Json::array();
            for (const auto& m : c.members) members.push_back(Json{{"file", m.file}, {"witness", morphism_to_json(m.witness)}});
            for (const auto& f : iso) group.push_back(morphism_to_json(f));
            out.push_back(Json{{"representative", c.members.front().file},
                               {"core", calibrated_to_json(c.core)},
                               {"members", members},
                               {"isotropy", group}});
        } else {
            o.out << "class " << i << ": " << c.members.front().file << " (core l=" << c.core.l
                  << ", edges=" << c.core.edges.size() << ")\n";
            for (const auto& m : c.members)
                o.out << "  " << m.file << " witness " << morphism_to_json(m.witness).dump() << '\n';
            o.out << "  isotropy";
            for (const auto& f : iso) o.out << ' ' << morphism_to_json(f).dump();
            o.out << '\n';
        }
    }
    if (o.json) o.out << Json{{"classes", out}}.dump(2) << '\n';
    return 0;
}

int cmd_convert(const Output& o, const std::string& path, const std::string& from, const std::string& to,
                std::optional<long long> xstar) {
    if (to != "calibrated") throw Error("BadInput", "--to only supports calibrated");
    const Json doc = load_json_file(path);
    CalibratedHypergraph result;
    if (from == "weighted") {
        result = weighted_to_calibrated(weighted_from_json(doc));
    } else if (from == "marked") {
        auto h = marked_from_json(doc);
        Elem x = default_xstar(*h.ring);
        if (xstar) {
            if (*xstar < 0 || *xstar >= static_cast<long long>(h.ring->size()))
                throw Error("BadInput", "--xstar must be a field element");
            x = static_cast<Elem>(*xstar);
        }
        result = marked_to_calibrated(h, x);
        if (build_state(result) != marked_state(h, x)) throw CheckFailed{};
    } else if (from == "poly") {
        result = poly_to_calibrated(poly_from_json(doc));
    } else {
        throw Error("BadInput", "--from must be weighted, marked or poly");
    }
    o.out << calibrated_to_json(result).dump(2) << '\n';
    return 0;
}

int cmd_matrices(const Output& o, const std::string& path) {
    auto ring = ring_from_json(load_json_file(path));
    const auto& R = *ring;
    const auto a = power_matrix(R), ainv = power_matrix_inverse(R);
    const auto c = basic_power_matrix(R), cinv = basic_power_matrix_inverse(R);
    const auto special = special_exponents(R);
    if (o.json) {
        Json polys = Json::array();
        for (Elem y = 0; y < R.size(); ++y) {
            Json coeffs = Json::array();
            for (Elem e : m_polynomial(R, special.s[y]).coeffs) coeffs.push_back(element_to_json(R, e));
            polys.push_back(Json{{"y", element_to_json(R, y)}, {"coeffs", coeffs}});
        }
        o.out << Json{{"ring", ring_to_json(R)},
                      {"A", matrix_json(R, a)},
                      {"A_inv", matrix_json(R, ainv)},
                      {"C", matrix_json(R, c)},
                      {"C_inv", matrix_json(R, cinv)},
                      {"m_s", polys}}
                     .dump(2)
              << '\n';
        return 0;
    }
    o.out << "A\n" << matrix_text(R, a) << "A^-1\n" << matrix_text(R, ainv);
    o.out << "C\n" << matrix_text(R, c) << "C^-1\n" << matrix_text(R, cinv);
    o.out << "m_s(y)\n";
    for (Elem y = 0; y < R.size(); ++y)
        o.out << "y=" << R.to_string(y) << ": " << poly_text(R, m_polynomial(R, special.s[y])) << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Calibrated hypergraph states over Galois rings"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Machine-readable output and errors");

    std::string path, dir, from, to = "calibrated";
    bool dense = false;
    VerifyFlags flags;
    std::size_t max_l = 6;
    std::optional<long long> xstar;

    auto* ring = app.add_subcommand("ring", "Ring queries");
    ring->require_subcommand(1);
    auto* ring_info = ring->add_subcommand("info", "Trace table, units and cyclicity");
    ring_info->add_option("ring", path, "Ring JSON")->required();

    auto* state = app.add_subcommand("state", "State construction and verification");
    state->require_subcommand(1);
    auto* build = state->add_subcommand("build", "Emit the phase table");
    build->add_option("hypergraph", path, "Calibrated hypergraph JSON")->required();
    build->add_flag("--dense", dense, "Append complex amplitudes");
    auto* verify = state->add_subcommand("verify", "Run invariant suites");
    verify->add_option("hypergraph", path, "Calibrated hypergraph JSON")->required();
    verify->add_flag("--stabilizer", flags.stabilizer);
    verify->add_flag("--covariance", flags.covariance);
    verify->add_flag("--lme", flags.lme);
    verify->add_flag("--pushforward", flags.pushforward);

    auto* reduce = app.add_subcommand("reduce", "Effectivize and extract the primitive core");
    reduce->add_option("hypergraph", path, "Calibrated hypergraph JSON")->required();

    auto* classify = app.add_subcommand("classify", "Congruence classes of a directory of hypergraphs");
    classify->add_option("dir", dir, "Directory of calibrated hypergraph JSON files")->required();
    classify->add_option("--max-l", max_l, "Largest core size searched");

    auto* convert = app.add_subcommand("convert", "Convert weighted, marked or polynomial input");
    convert->add_option("hypergraph", path, "Input JSON")->required();
    convert->add_option("--from", from)->required()->check(CLI::IsMember({"weighted", "marked", "poly"}));
    convert->add_option("--to", to)->check(CLI::IsMember({"calibrated"}));
    convert->add_option("--xstar", xstar, "Control value for marked input");

    auto* matrices = app.add_subcommand("matrices", "Power and basic power matrices of a field");
    matrices->add_option("ring", path, "Ring JSON")->required();

    auto report = [&](const std::string& code, const std::string& message) {
        if (json)
            err << Json{{"error", code}, {"message", message}}.dump() << '\n';
        else
            err << "error: " << message << '\n';
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        report("BadArguments", e.what());
        return 1;
    }

    const Output o{out, json};
    try {
        if (ring_info->parsed()) return cmd_ring_info(o, path);
        if (build->parsed()) return cmd_state_build(o, path, dense);
        if (verify->parsed()) return cmd_state_verify(o, path, flags);
        if (reduce->parsed()) return cmd_reduce(o, path);
        if (classify->parsed()) return cmd_classify(o, dir, max_l);
        if (convert->parsed()) return cmd_convert(o, path, from, to, xstar);
        if (matrices->parsed()) return cmd_matrices(o, path);
    } catch (const CheckFailed&) {
        report("CheckFailed", "conversion did not preserve the state");
        return 2;
    } catch (const Error& e) {
        report(e.code(), e.what());
        return 1;
    } catch (const std::exception& e) {
        report("BadInput", e.what());
        return 1;
    }
    report("BadArguments", "no command given");
    return 1;
}

}  // namespace hgs
