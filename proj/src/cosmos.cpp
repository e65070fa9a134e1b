#include "platy/cosmos.hpp"

#include <numeric>

#include <algorithm>
#include <sstream>

namespace platy {

namespace {

const std::vector<TypeInfo> kInfo = {
    {CosmType::c1, "c1", true, "1", 1, 1, {"A", "B", "C", "D", "E", "F"}, false},
    {CosmType::c2, "c2", true, "22", 2, 2, {"D", "A", "B", "C"}, false},
    {CosmType::c3, "c3", true, "33", 3, 3, {"D", "A"}, true},
    {CosmType::c4, "c4", true, "44", 4, 4, {"D", "A"}, true},
    {CosmType::c6, "c6", true, "66", 6, 6, {"D", "A"}, true},
    {CosmType::c22, "c22", true, "222", 4, 4, {"A", "B", "C"}, false},
    {CosmType::pa1, "+a1", false, "*", 2, 2, {"D", "A", "B", "C"}, false},
    {CosmType::ma1, "-a1", false, "*", 2, 4, {"D", "A", "B", "C"}, false},
    {CosmType::pa2, "+a2", false, "*22", 4, 4, {"D", "A", "B"}, false},
    {CosmType::ma2, "-a2", false, "*22", 4, 8, {"D", "A", "B"}, false},
};

[[noreturn]] void bad(const std::string& m) { throw DomainError("InvalidParameters", m); }

std::string compact(const Q& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_str();
}

// the 2D base conorms (A,B,C) of a helicosm or amphicosm
std::array<Q, 3> base_conorms(const Descriptor& d) {
    switch (d.type) {
        case CosmType::c3:
        case CosmType::c6:
            return {d.p("A"), d.p("A"), d.p("A")};
        case CosmType::c4:
            return {d.p("A"), d.p("A"), Q(0)};
        default:
            return {d.p("A"), d.p("B"), d.p("C")};
    }
}

// c1 labels on the Fano plane
const std::array<int, 6> kC1Pos = {P01, P02, P12, P23, P13, P03};
const char* kC1Names[6] = {"A", "B", "C", "D", "E", "F"};

}  // namespace

const std::vector<CosmType>& all_cosm_types() {
    static const std::vector<CosmType> all = {CosmType::c1,  CosmType::c2,  CosmType::c3,  CosmType::c4,  CosmType::c6,
                                              CosmType::c22, CosmType::pa1, CosmType::ma1, CosmType::pa2, CosmType::ma2};
    return all;
}

const TypeInfo& type_info(CosmType t) { return kInfo[static_cast<int>(t)]; }

std::string tag(CosmType t) { return type_info(t).tag; }

CosmType parse_cosm_type(const std::string& s0) {
    std::string s = s0;
    // unicode minus sign
    const std::string um = "\xe2\x88\x92";
    if (s.rfind(um, 0) == 0) s = "-" + s.substr(um.size());
    for (auto& i : kInfo)
        if (i.tag == s) return i.type;
    throw DomainError("ParseError", "unknown platycosm type '" + s0 + "'");
}

std::string to_string(Chirality c) {
    switch (c) {
        case Chirality::dextral: return "dextral";
        case Chirality::sinistral: return "sinistral";
        default: return "n/a";
    }
}

Chirality parse_chirality(const std::string& s) {
    if (s == "dextral" || s == "d") return Chirality::dextral;
    if (s == "sinistral" || s == "s") return Chirality::sinistral;
    if (s.empty() || s == "n/a" || s == "none" || s == "null") return Chirality::none;
    throw DomainError("ParseError", "unknown chirality '" + s + "'");
}

const Q& Descriptor::p(const std::string& k) const {
    auto it = params.find(k);
    if (it == params.end()) bad("missing parameter " + k);
    return it->second;
}

Descriptor make_descriptor(CosmType t, const std::vector<Q>& values, Chirality c) {
    auto& info = type_info(t);
    if (values.size() != info.params.size())
        bad(info.tag + " takes " + std::to_string(info.params.size()) + " parameters");
    Descriptor d;
    d.type = t;
    for (size_t i = 0; i < values.size(); ++i) d.params[info.params[i]] = values[i];
    if (info.metachiral && c == Chirality::none) c = Chirality::dextral;
    d.chirality = c;
    return d;
}

Descriptor parse_descriptor(CosmType t, const std::string& kv, Chirality c) {
    auto& info = type_info(t);
    std::map<std::string, Q> got;
    std::stringstream ss(kv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw DomainError("ParseError", "expected NAME=value, got '" + item + "'");
        auto k = item.substr(0, eq);
        if (std::find(info.params.begin(), info.params.end(), k) == info.params.end())
            throw DomainError("ParseError", "parameter " + k + " is not in the " + info.tag + " schema");
        got[k] = parse_q(item.substr(eq + 1));
    }
    std::vector<Q> vals;
    for (auto& k : info.params) {
        if (!got.count(k)) throw DomainError("ParseError", "missing parameter " + k);
        vals.push_back(got[k]);
    }
    return make_descriptor(t, vals, c);
}

void validate(const Descriptor& d) {
    auto& info = type_info(d.type);
    if (d.params.size() != info.params.size()) bad("wrong number of parameters for " + info.tag);
    for (auto& k : info.params) {
        if (d.p(k) < 0) bad(k + " must be non-negative");
    }
    auto positive = [&](std::initializer_list<const char*> ks) {
        for (auto k : ks)
            if (d.p(k) <= 0) bad(std::string(k) + " must be positive for " + info.tag);
    };
    switch (d.type) {
        case CosmType::c1:
            if (determinant(c1_diagram(d)) <= 0) bad("c1 conorms do not give a lattice");
            break;
        case CosmType::c2:
        case CosmType::pa1:
        case CosmType::ma1: {
            positive({"D"});
            auto b = base_conorms(d);
            int zeros = (b[0] == 0) + (b[1] == 0) + (b[2] == 0);
            if (zeros > 1) bad("base lattice degenerate");
            break;
        }
        case CosmType::c3:
        case CosmType::c4:
        case CosmType::c6:
            positive({"D", "A"});
            break;
        case CosmType::c22:
            positive({"A", "B", "C"});
            break;
        case CosmType::pa2:
        case CosmType::ma2:
            positive({"A", "B", "D"});
            break;
    }
    if (info.metachiral) {
        if (d.chirality == Chirality::none) bad("chirality required for " + info.tag);
    } else if (d.chirality != Chirality::none) {
        bad("chirality only applies to c3, c4, c6");
    }
}

Conorms3 c1_diagram(const Descriptor& d) {
    Conorms3 c;
    for (auto& x : c.v) x = 0;
    for (int i = 0; i < 6; ++i) c.v[kC1Pos[i]] = d.p(kC1Names[i]);
    return c;
}

Descriptor c1_from_diagram(const Conorms3& in) {
    Conorms3 c = canonical(in);
    Descriptor d;
    d.type = CosmType::c1;
    for (int i = 0; i < 6; ++i) d.params[kC1Names[i]] = c.v[kC1Pos[i]];
    return d;
}

Descriptor canonicalize(const Descriptor& d) {
    validate(d);
    Descriptor r = d;
    auto sort_desc = [&](std::vector<const char*> ks) {
        std::vector<Q> v;
        for (auto k : ks) v.push_back(d.p(k));
        std::sort(v.begin(), v.end(), [](const Q& a, const Q& b) { return a > b; });
        for (size_t i = 0; i < ks.size(); ++i) r.params[ks[i]] = v[i];
    };
    switch (d.type) {
        case CosmType::c1:
            return c1_from_diagram(c1_diagram(d));
        case CosmType::c2:
            sort_desc({"A", "B", "C"});
            break;
        case CosmType::c22:
            sort_desc({"A", "B", "C"});
            break;
        case CosmType::pa1:
        case CosmType::ma1:
            sort_desc({"B", "C"});
            break;
        default:
            break;
    }
    return r;
}

std::string name(const Descriptor& d) {
    auto v = [&](const char* k) { return compact(d.p(k)); };
    std::string t = tag(d.type);
    switch (d.type) {
        case CosmType::c1:
            return t + "^{" + v("D") + " " + v("E") + " " + v("F") + "}_{" + v("A") + " " + v("B") + " " + v("C") + "}";
        case CosmType::c2:
            return t + "^{" + v("D") + "}_{" + v("A") + " " + v("B") + " " + v("C") + "}";
        case CosmType::c3:
        case CosmType::c6:
            return t + "^{" + v("D") + "}_{" + v("A") + " " + v("A") + " " + v("A") + "}";
        case CosmType::c4:
            return t + "^{" + v("D") + "}_{" + v("A") + " " + v("A") + "}";
        case CosmType::c22:
            return t + "^{" + v("A") + " " + v("B") + " " + v("C") + "}";
        case CosmType::pa1:
        case CosmType::ma1:
            return t + "^{" + v("D") + "}_{" + v("A") + ":" + v("B") + " " + v("C") + "}";
        case CosmType::pa2:
        case CosmType::ma2:
            return t + "^{" + v("D") + "}_{" + v("A") + ":" + v("B") + "}";
    }
    return t;
}

Mat3 naming_lattice(const Descriptor& d) {
    validate(d);
    Mat3 g;
    for (auto& r : g)
        for (auto& x : r) x = 0;
    switch (d.type) {
        case CosmType::c1:
            return gram_of(c1_diagram(d));
        case CosmType::c22:
            g[0][0] = d.p("A");
            g[1][1] = d.p("B");
            g[2][2] = d.p("C");
            return g;
        case CosmType::pa2:
        case CosmType::ma2:
            g[0][0] = d.p("A");
            g[1][1] = d.p("B");
            g[2][2] = d.p("D");
            return g;
        default: {
            // base x, y with w = -x-y: A = -x.w, B = -y.w, C = -x.y
            auto b = base_conorms(d);
            g[0][0] = b[0] + b[2];
            g[0][1] = g[1][0] = -b[2];
            g[1][1] = b[1] + b[2];
            g[2][2] = d.p("D");
            return g;
        }
    }
}

TranslationLattice translation_lattice(const Descriptor& d) {
    Mat3 g = naming_lattice(d);
    Mat3 b;
    for (auto& r : b)
        for (auto& x : r) x = 0;
    auto col = [&](int j, int x, int y, int z) {
        b[0][j] = x;
        b[1][j] = y;
        b[2][j] = z;
    };
    int idx = type_info(d.type).index;
    switch (d.type) {
        case CosmType::c1: col(0, 1, 0, 0); col(1, 0, 1, 0); col(2, 0, 0, 1); break;
        case CosmType::c2:
        case CosmType::c3:
        case CosmType::c4:
        case CosmType::c6:
            col(0, 1, 0, 0); col(1, 0, 1, 0); col(2, 0, 0, idx); break;
        case CosmType::c22:
        case CosmType::ma2:
            col(0, 2, 0, 0); col(1, 0, 2, 0); col(2, 0, 0, 2); break;
        case CosmType::pa1: col(0, 2, 0, 0); col(1, 0, 1, 0); col(2, 0, 0, 1); break;
        case CosmType::ma1: col(0, 2, 0, 0); col(1, 0, 1, 1); col(2, 0, 0, 2); break;
        case CosmType::pa2: col(0, 2, 0, 0); col(1, 0, 2, 0); col(2, 0, 0, 1); break;
    }
    return {b, congruent(g, b), idx};
}

Q volume_sq(const Descriptor& d) {
    auto t = translation_lattice(d);
    int n = type_info(d.type).point_group_order;
    Q v = det(t.gram) / Q(n * n);
    v.canonicalize();
    return v;
}

std::string classify_basal_vector(const Descriptor& d, long long m, long long n) {
    if (d.type != CosmType::pa1 && d.type != CosmType::ma1)
        throw DomainError("InvalidParameters", "basal vectors are classified for +a1 and -a1 only");
    if (std::gcd(m, n) != 1) throw DomainError("NotPrimitive", "(m,n) must be primitive");
    // y (and only y, mod 2) is a translation vector; x and w are glide vectors
    bool mo = (m % 2) != 0, no = (n % 2) != 0;
    return (!mo && no) ? "2T" : "2K";
}

}  // namespace platy
