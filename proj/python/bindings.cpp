// python bridge: everything crosses as JSON text; the package turns "p/q" strings into Fractions
#include "platy/bravo.hpp"
#include "platy/io.hpp"
#include "platy/metrics.hpp"
#include "platy/tables.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace platy;

namespace {

Descriptor descriptor(const std::string& text) {
    auto d = descriptor_from_json(parse_json_text(text));
    validate(d);
    return canonicalize(d);
}

std::string reduce_gram(const std::string& gram) {
    auto m = matrix_from_json(parse_json_text(gram));
    json j;
    if (m.size() == 2) {
        std::array<std::array<Q, 2>, 2> g = {{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}};
        std::vector<Conorms2> trace;
        auto r = reduce2(conorms2_from_gram(g), &trace);
        json t = json::array();
        for (auto& s : trace) t.push_back(to_json(s));
        j["trace"] = t;
        j["reduced"] = to_json(r);
        j["determinant"] = to_json(determinant2(r));
        return j.dump();
    }
    Mat3 g;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) g[a][b] = m[a][b];
    if (!positive_definite(g)) throw DomainError("NotPositiveDefinite", "Gram matrix is not positive definite");
    ReduceTrace tr;
    auto r = reduce3(putative_conorms(superbase_from_gram(g)), &tr);
    json t = json::array();
    for (auto& s : tr.steps) t.push_back(to_json(s));
    j["trace"] = t;
    j["reduced"] = to_json(r);
    json v = json::array();
    for (auto& x : vonorms(r).v) v.push_back(to_json(x));
    j["vonorms"] = v;
    j["determinant"] = to_json(determinant(r));
    j["covering_radius_sq"] = to_json(covering_radius_sq(r));
    return j.dump();
}

std::string classify(const std::string& conorms) {
    auto r = reduce3(conorms3_from_json(parse_json_text(conorms)));
    auto b = bravo_class(r);
    json j;
    j["voronoi_type"] = to_string(b.voronoi);
    j["bravo_letter"] = std::string(1, b.letter);
    j["bravais_name"] = bravais_class(b.letter).name;
    j["symmetry_factor"] = b.symmetry_factor;
    j["point_group_orbifold"] = b.orbifold;
    return j.dump();
}

std::string invariants(const std::string& desc) {
    auto d = descriptor(desc);
    json j;
    j["descriptor"] = to_json(d);
    j["name"] = name(d);
    j["volume_sq"] = to_json(volume_sq(d));
    j["homology"] = homology(d.type);
    json r = to_json(metric_report(d));
    for (auto& [k, v] : r.items()) j[k] = v;
    return j.dump();
}

std::string covers(const std::string& desc) {
    auto d = descriptor(desc);
    json out = json::array();
    for (auto& c : double_covers(d))
        out.push_back({{"signs", sign_string(d.type, c.h)},
                       {"name", name(c.table)},
                       {"descriptor", to_json(c.table)},
                       {"agrees", c.agrees}});
    return out.dump();
}

std::string recognize_group(const std::string& group) {
    auto d = recognize(group_from_json(parse_json_text(group)));
    json j;
    j["descriptor"] = to_json(d);
    j["name"] = name(d);
    return j.dump();
}

std::string generators(const std::string& desc) { return to_json(standard_generators(descriptor(desc))).dump(); }

std::string oracle(const std::string& desc, int grid) {
    auto d = descriptor(desc);
    OracleConfig cfg;
    cfg.grid = grid;
    auto iv = diameter_oracle(d, cfg);
    json j;
    j["systole_sq"] = to_json(systole_oracle(d));
    j["diameter_lower"] = to_json(iv.lower);
    j["diameter_upper"] = to_json(iv.upper);
    j["grid"] = iv.grid;
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_platy, m) {
    m.doc() = "exact lattice and platycosm computations (JSON in, JSON out)";
    static py::exception<DomainError> exc(m, "DomainError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DomainError& e) {
            exc(e.what());
        }
    });
    m.def("reduce_gram", &reduce_gram);
    m.def("classify", &classify);
    m.def("invariants", &invariants);
    m.def("covers", &covers);
    m.def("recognize", &recognize_group);
    m.def("generators", &generators);
    m.def("oracle", &oracle, py::arg("descriptor"), py::arg("grid") = 0);
    m.def("table", &render_table);
}
