#include "platy/io.hpp"

#include <fstream>
#include <sstream>

namespace platy {

namespace {

[[noreturn]] void parse_fail(const std::string& m) { throw DomainError("ParseError", m); }

// 1-based line and column of a byte offset
std::string where(const std::string& text, size_t byte) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail("invalid JSON at " + where(text, e.byte ? e.byte - 1 : 0));
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

json to_json(const Q& x) { return qstr(x); }

Q q_from_json(const json& j) {
    if (j.is_number_integer()) return Q(j.get<long>());
    if (j.is_string()) return parse_q(j.get<std::string>());
    parse_fail("expected an integer or a \"p/q\" string, got " + j.dump());
}

json to_json(const Conorms3& d) {
    json a = json::array();
    for (auto& x : d.v) a.push_back(to_json(x));
    return a;
}

json to_json(const Conorms2& d) {
    json a = json::array();
    for (auto& x : d.v) a.push_back(to_json(x));
    return a;
}

Conorms3 conorms3_from_json(const json& j) {
    if (!j.is_array() || j.size() != 7) parse_fail("a 3D conorm diagram is an array of 7 values [p01,p02,p03,p12,p13,p23,q]");
    Conorms3 d;
    for (int i = 0; i < 7; ++i) d.v[i] = q_from_json(j[i]);
    return d;
}

Conorms2 conorms2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) parse_fail("a 2D conorm triple is an array of 3 values");
    Conorms2 d;
    for (int i = 0; i < 3; ++i) d.v[i] = q_from_json(j[i]);
    return d;
}

json gram_to_json(const Mat3& g) {
    json a = json::array();
    for (auto& r : g) {
        json row = json::array();
        for (auto& x : r) row.push_back(to_json(x));
        a.push_back(row);
    }
    return a;
}

std::vector<std::vector<Q>> matrix_from_json(const json& j) {
    if (!j.is_array() || (j.size() != 2 && j.size() != 3)) parse_fail("expected a 2x2 or 3x3 matrix");
    std::vector<std::vector<Q>> m;
    for (auto& r : j) {
        if (!r.is_array() || r.size() != j.size()) parse_fail("matrix rows must match its size");
        std::vector<Q> row;
        for (auto& x : r) row.push_back(q_from_json(x));
        m.push_back(row);
    }
    for (size_t a = 0; a < m.size(); ++a)
        for (size_t b = 0; b < m.size(); ++b)
            if (m[a][b] != m[b][a]) throw DomainError("NotSymmetric", "Gram matrix must be symmetric");
    return m;
}

json to_json(const Descriptor& d) {
    json j;
    j["type"] = tag(d.type);
    json p = json::object();
    for (auto& k : type_info(d.type).params) p[k] = to_json(d.p(k));
    j["params"] = p;
    j["chirality"] = d.chirality == Chirality::none ? json(nullptr) : json(to_string(d.chirality));
    return j;
}

Descriptor descriptor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j.contains("params")) parse_fail("descriptor needs type and params");
    CosmType t = parse_cosm_type(j["type"].get<std::string>());
    auto& info = type_info(t);
    std::vector<Q> v;
    for (auto& k : info.params) {
        if (!j["params"].contains(k)) parse_fail("missing parameter " + k);
        v.push_back(q_from_json(j["params"][k]));
    }
    for (auto& [k, _] : j["params"].items())
        if (std::find(info.params.begin(), info.params.end(), k) == info.params.end())
            parse_fail("parameter " + k + " is not in the " + info.tag + " schema");
    Chirality c = Chirality::none;
    if (j.contains("chirality") && !j["chirality"].is_null()) c = parse_chirality(j["chirality"].get<std::string>());
    return make_descriptor(t, v, c);
}

json to_json(const Affine& a) {
    json j;
    json lin = json::array();
    for (auto& r : a.L) {
        json row = json::array();
        for (auto& x : r) {
            if (is_integer(x))
                row.push_back(to_ll(x));
            else
                row.push_back(qstr(x));
        }
        lin.push_back(row);
    }
    j["linear"] = lin;
    json t = json::array();
    for (auto& x : a.t) t.push_back(to_json(x));
    j["translation"] = t;
    return j;
}

json to_json(const SpaceGroup& g) {
    json j;
    j["gram"] = gram_to_json(g.gram);
    json gens = json::array();
    for (auto& a : g.gens) gens.push_back(to_json(a));
    j["generators"] = gens;
    return j;
}

SpaceGroup group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("generators")) parse_fail("space group needs generators (and optionally gram)");
    SpaceGroup g;
    g.gram = mat_identity();
    if (j.contains("gram")) {
        auto m = matrix_from_json(j["gram"]);
        if (m.size() != 3) parse_fail("frame Gram must be 3x3");
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) g.gram[a][b] = m[a][b];
    }
    for (auto& e : j["generators"]) {
        if (!e.contains("linear") || !e.contains("translation")) parse_fail("generator needs linear and translation");
        Affine a;
        auto& L = e["linear"];
        auto& t = e["translation"];
        if (!L.is_array() || L.size() != 3 || !t.is_array() || t.size() != 3) parse_fail("generator shapes are 3x3 and 3");
        for (int r = 0; r < 3; ++r) {
            if (!L[r].is_array() || L[r].size() != 3) parse_fail("linear part must be 3x3");
            for (int c = 0; c < 3; ++c) a.L[r][c] = q_from_json(L[r][c]);
            a.t[r] = q_from_json(t[r]);
        }
        if (det(a.L) == 0) throw DomainError("InvalidGroup", "singular linear part");
        g.gens.push_back(a);
    }
    return g;
}

json to_json(const MetricReport& r) {
    json j;
    j["systole_sq"] = to_json(r.systole_sq);
    j["injectivity_radius_sq"] = to_json(r.injectivity_radius_sq);
    j["diameter_sq"] = to_json(r.diameter_sq);
    j["diameter_kind"] = r.diameter_kind;
    j["witness"] = r.witness;
    j["diameter_witness"] = r.diameter_witness;
    return j;
}

namespace {

bool is_rational_string(const json& j) {
    if (!j.is_string()) return false;
    auto s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 >= s.size()) return false;
    for (size_t i = 0; i < s.size(); ++i)
        if (i != slash && !(std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && s[i] == '-'))) return false;
    return true;
}

std::string scalar(const json& j) {
    if (j.is_null()) return "-";
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (is_rational_string(j)) {
            Q q = parse_q(s);
            std::ostringstream o;
            o.precision(6);
            o << qstr(q) << " (~" << q.get_d() << ")";
            return o.str();
        }
        return s;
    }
    return j.dump();
}

bool all_scalars(const json& a) {
    for (auto& x : a)
        if (x.is_structured()) return false;
    return true;
}

void render(const json& j, int indent, std::ostringstream& out) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !all_scalars(v))) {
                out << pad << k << ":\n";
                render(v, indent + 2, out);
            } else if (v.is_array()) {
                // items with spaces inside are separated by commas
                bool spaced = false;
                for (auto& x : v) spaced = spaced || (x.is_string() && x.get<std::string>().find(' ') != std::string::npos);
                out << pad << k << ":";
                bool first = true;
                for (auto& x : v) {
                    out << (first || !spaced ? " " : ", ")
                        << (is_rational_string(x) ? qstr(parse_q(x.get<std::string>())) : scalar(x));
                    first = false;
                }
                out << "\n";
            } else {
                out << pad << k << ": " << scalar(v) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (auto& v : j) {
            if (v.is_structured()) {
                out << pad << "-\n";
                render(v, indent + 2, out);
            } else {
                out << pad << "- " << scalar(v) << "\n";
            }
        }
    } else {
        out << pad << scalar(j) << "\n";
    }
}

}  // namespace

std::string render_text(const json& j) {
    std::ostringstream out;
    render(j, 0, out);
    return out.str();
}

}  // namespace platy
