#include "platy/bravo.hpp"

#include "platy/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace platy {

std::string to_string(VoronoiType t) {
    switch (t) {
        case VoronoiType::tO: return "tO";
        case VoronoiType::hD: return "hD";
        case VoronoiType::rD: return "rD";
        case VoronoiType::hP: return "hP";
        case VoronoiType::rC: return "rC";
    }
    return "?";
}

static std::vector<int> zeros_of(const Conorms3& d) {
    std::vector<int> z;
    for (int i = 0; i < 7; ++i)
        if (d.v[i] == 0) z.push_back(i);
    return z;
}

VoronoiType voronoi_type(const Conorms3& d) {
    if (!is_reduced(d)) throw DomainError("NotReduced", "Voronoi type needs a reduced diagram");
    auto z = zeros_of(d);
    if (z.size() >= 5 || determinant(d) == 0) throw DomainError("DegenerateDiagram", "diagram has rank below 3");
    switch (z.size()) {
        case 1: return VoronoiType::tO;
        case 2: return VoronoiType::hD;
        case 3: return collinear(z[0], z[1], z[2]) ? VoronoiType::rD : VoronoiType::hP;
        default: return VoronoiType::rC;
    }
}

namespace {

struct Template {
    char letter;
    int factor;
    const char* orbifold;
    std::vector<std::vector<int>> equal;  // groups of label indices that must agree
};

struct Shape {
    std::vector<int> zeros;   // standard zero set
    std::vector<int> labels;  // label positions in the standard frame
    std::vector<Template> templates;
};

// standard frames: tO labels A..F (G = q); hD labels A B C D E with zeros q, p01;
// rD the four points off the zero line; hP a b c then D; rC the three nonzero points
const std::map<VoronoiType, Shape>& shapes() {
    static const std::map<VoronoiType, Shape> s = {
        {VoronoiType::tO,
         {{PQ},
          {P01, P02, P12, P23, P13, P03},
          {{'A', 1, "×", {}},
           {'B', 2, "2*", {{0, 3}, {1, 4}}},
           {'C', 4, "*222", {{0, 3}, {1, 4}, {2, 5}}},
           {'D', 2, "2*", {{0, 1}, {3, 4}}},
           {'E', 4, "*222", {{0, 1, 3, 4}}},
           {'F', 8, "*422", {{0, 1, 3, 4}, {2, 5}}},
           {'G', 6, "2*3", {{0, 1, 2}, {3, 4, 5}}},
           {'H', 24, "*432", {{0, 1, 2, 3, 4, 5}}}}}},
        {VoronoiType::hD,
         {{PQ, P01},
          {P02, P03, P13, P12, P23},
          {{'I', 1, "×", {}},
           {'J', 2, "2*", {{0, 2}, {1, 3}}},
           {'K', 2, "2*", {{0, 1}}},
           {'L', 4, "*222", {{0, 1}, {2, 3}}},
           {'M', 8, "*422", {{0, 1, 2, 3}}}}}},
        {VoronoiType::rD,
         {{P12, P13, P23},
          {P01, P02, P03, PQ},
          {{'N', 1, "×", {}},
           {'O', 2, "2*", {{0, 1}}},
           {'P', 6, "2*3", {{0, 1, 2}}},
           {'Q', 4, "*222", {{0, 1}, {2, 3}}},
           {'R', 24, "*432", {{0, 1, 2, 3}}}}}},
        {VoronoiType::hP,
         {{P01, P02, P03},
          {P12, P13, P23, PQ},
          {{'S', 2, "2*", {}}, {'T', 4, "*222", {{0, 1}}}, {'U', 12, "*622", {{0, 1, 2}}}}}},
        {VoronoiType::rC,
         {{P12, P13, P23, PQ},
          {P01, P02, P03},
          {{'V', 4, "*222", {}}, {'W', 8, "*422", {{0, 1}}}, {'X', 24, "*432", {{0, 1, 2}}}}}},
    };
    return s;
}

bool maps_set(const Perm7& p, const std::vector<int>& from, const std::vector<int>& to) {
    std::set<int> img, target(to.begin(), to.end());
    for (int i : from) img.insert(p[i]);
    return img == target;
}

std::vector<char> satisfied(const Conorms3& d, VoronoiType t) {
    const Shape& sh = shapes().at(t);
    auto z = zeros_of(d);
    const Perm7* to_std = nullptr;
    for (auto& p : collineations())
        if (maps_set(p, z, sh.zeros)) {
            to_std = &p;
            break;
        }
    if (!to_std) throw DomainError("Unrecognized", "zero pattern not in standard position");
    Conorms3 e = permute(*to_std, d);
    std::vector<char> out;
    for (auto& tpl : sh.templates) {
        bool ok = false;
        for (auto& s : collineations()) {
            if (!maps_set(s, sh.zeros, sh.zeros)) continue;
            bool all = true;
            for (auto& grp : tpl.equal)
                for (size_t k = 1; k < grp.size() && all; ++k)
                    all = e.v[s[sh.labels[grp[k]]]] == e.v[s[sh.labels[grp[0]]]];
            if (all) {
                ok = true;
                break;
            }
        }
        if (ok) out.push_back(tpl.letter);
    }
    return out;
}

const Template& template_of(char letter, VoronoiType* vt = nullptr) {
    for (auto& [t, sh] : shapes())
        for (auto& tpl : sh.templates)
            if (tpl.letter == letter) {
                if (vt) *vt = t;
                return tpl;
            }
    throw DomainError("UnknownLetter", std::string("no BraVo class ") + letter);
}

}  // namespace

std::vector<char> satisfied_templates(const Conorms3& d) { return satisfied(d, voronoi_type(d)); }

BravoClass bravo_info(char letter) {
    VoronoiType vt;
    auto& tpl = template_of(letter, &vt);
    return {tpl.letter, vt, tpl.orbifold, tpl.factor};
}

BravoClass bravo_class(const Conorms3& d) {
    auto t = voronoi_type(d);
    auto sat = satisfied(d, t);
    int best = 0;
    char letter = 0;
    bool tie = false;
    for (char c : sat) {
        int f = template_of(c).factor;
        if (f > best) {
            best = f;
            letter = c;
            tie = false;
        } else if (f == best)
            tie = true;
    }
    if (!letter || tie) throw DomainError("Unrecognized", "BraVo templates are not exclusive here");
    return bravo_info(letter);
}

const std::vector<char>& all_letters() {
    static const std::vector<char> l = [] {
        std::vector<char> out;
        for (char c = 'A'; c <= 'X'; ++c) out.push_back(c);
        return out;
    }();
    return l;
}

BravaisClass bravais_class(char letter) {
    static const std::map<char, BravaisClass> m = [] {
        std::map<char, BravaisClass> r;
        auto put = [&](const std::string& letters, const std::string& name, int f) {
            for (char c : letters) r[c] = {name, f};
        };
        put("AIN", "Triclinic", 1);
        put("BDJKO", "base-centered Monoclinic", 2);
        put("CLQ", "body-centered Orthorhombic", 4);
        put("E", "face-centered Orthorhombic", 4);
        put("FM", "body-centered Tetragonal", 8);
        put("GP", "Rhombohedral (or Trigonal)", 6);
        put("H", "body-centered Cubic (bcc)", 24);
        put("R", "face-centered Cubic (fcc)", 24);
        put("S", "primitive Monocline", 2);
        put("T", "base-centered Orthorhombic", 4);
        put("U", "Hexagonal", 12);
        put("V", "Orthorhombic", 4);
        put("W", "primitive Tetragonal", 8);
        put("X", "primitive Cubic", 24);
        return r;
    }();
    auto it = m.find(letter);
    if (it == m.end()) throw DomainError("UnknownLetter", std::string("no BraVo class ") + letter);
    return it->second;
}

std::vector<BravaisClass> all_bravais_classes() {
    std::vector<BravaisClass> out;
    std::set<std::string> seen;
    for (char c : all_letters()) {
        auto b = bravais_class(c);
        if (seen.insert(b.name).second) out.push_back(b);
    }
    return out;
}

std::vector<IMat3> lattice_automorphisms(const Mat3& gram) {
    // every column of M is a lattice vector with the norm of the matching basis vector
    std::array<std::vector<IVec3>, 3> cand;
    Q top = qmax(qmax(gram[0][0], gram[1][1]), gram[2][2]);
    auto vs = short_vectors(qmat(gram), top);
    for (int i = 0; i < 3; ++i)
        for (auto& x : vs) {
            IVec3 v{x[0], x[1], x[2]};
            if (norm(gram, to_q(v)) == gram[i][i]) cand[i].push_back(v);
        }
    std::vector<IMat3> out;
    for (auto& a : cand[0])
        for (auto& b : cand[1]) {
            if (dot(gram, to_q(a), to_q(b)) != gram[0][1]) continue;
            for (auto& c : cand[2]) {
                if (dot(gram, to_q(a), to_q(c)) != gram[0][2] || dot(gram, to_q(b), to_q(c)) != gram[1][2]) continue;
                IMat3 m{};
                for (int i = 0; i < 3; ++i) {
                    m[i][0] = a[i];
                    m[i][1] = b[i];
                    m[i][2] = c[i];
                }
                if (det(m) != 0) out.push_back(m);
            }
        }
    return out;
}

Lattice2Class classify2d(const Conorms2& d) {
    for (auto& x : d.v)
        if (x < 0) throw DomainError("NotReduced", "2D diagram has a negative conorm");
    std::array<Q, 3> v = d.v;
    int zeros = 0;
    for (auto& x : v) zeros += x == 0;
    if (zeros >= 2) throw DomainError("DegenerateDiagram", "two vanishing conorms");
    std::sort(v.begin(), v.end());
    Lattice2Class c;
    c.order_flag = 0;
    if (zeros == 1) {
        c.voronoi = "rectangular";
        if (v[1] == v[2]) {
            c.conorm_pattern = "A A 0";
            c.delaunay = "square";
            c.shape = "square lattice";
        } else {
            c.conorm_pattern = "A B 0";
            c.delaunay = "rectangle";
            c.shape = "rectangular lattice";
        }
        return c;
    }
    c.voronoi = "hexagonal";
    if (v[0] == v[2]) {
        c.conorm_pattern = "A A A";
        c.delaunay = "equilateral triangle";
        c.shape = "hexagonal lattice";
    } else if (v[0] == v[1] || v[1] == v[2]) {
        c.conorm_pattern = "A A B";
        c.delaunay = "isosceles triangle";
        c.shape = "rhombic lattice";
        // repeated value against the odd one
        c.order_flag = v[0] == v[1] ? -1 : 1;
    } else {
        c.conorm_pattern = "A B C";
        c.delaunay = "scalene triangle";
        c.shape = "generic lattice";
    }
    return c;
}

std::vector<std::array<std::array<long long, 2>, 2>> lattice2_automorphisms(const std::array<std::array<Q, 2>, 2>& g) {
    QMat G = {{g[0][0], g[0][1]}, {g[1][0], g[1][1]}};
    auto vs = short_vectors(G, qmax(g[0][0], g[1][1]));
    auto n2 = [&](long long a, long long b) -> Q {
        Q x(static_cast<long>(a)), y(static_cast<long>(b));
        return g[0][0] * x * x + 2 * g[0][1] * x * y + g[1][1] * y * y;
    };
    auto ip = [&](const std::vector<long long>& u, const std::vector<long long>& w) -> Q {
        Q a(static_cast<long>(u[0])), b(static_cast<long>(u[1])), c(static_cast<long>(w[0])), e(static_cast<long>(w[1]));
        return g[0][0] * a * c + g[0][1] * (a * e + b * c) + g[1][1] * b * e;
    };
    std::vector<std::array<std::array<long long, 2>, 2>> out;
    for (auto& a : vs) {
        if (n2(a[0], a[1]) != g[0][0]) continue;
        for (auto& b : vs) {
            if (n2(b[0], b[1]) != g[1][1] || ip(a, b) != g[0][1]) continue;
            if (a[0] * b[1] - a[1] * b[0] == 0) continue;
            out.push_back({{{a[0], b[0]}, {a[1], b[1]}}});
        }
    }
    return out;
}

PlatycosmBravais platycosm_bravais_types(const std::string& type) {
    if (type == "c1") {
        PlatycosmBravais r;
        for (auto& b : all_bravais_classes()) r.patterns.push_back("c1 " + b.name);
        return r;
    }
    if (type == "c2")
        return {{"c2^D_{A B C}", "c2^D_{A A B}", "c2^D_{A A A}", "c2^D_{A B}", "c2^D_{A A}"},
                {"c2^D_{A B C} -> c2^D_{A A B} -> c2^D_{A A A}", "c2^D_{A B} -> c2^D_{A A}"}};
    if (type == "c3") return {{"c3^D_{A A A}"}, {}};
    if (type == "c4") return {{"c4^D_{A A}"}, {}};
    if (type == "c6") return {{"c6^D_{A A A}"}, {}};
    if (type == "c22")
        return {{"c22^{A B C}", "c22^{A A B}", "c22^{A A A}"}, {"c22^{A B C} -> c22^{A A B} -> c22^{A A A}"}};
    if (type == "+a1" || type == "-a1") {
        const std::string& s = type;
        return {{s + "^D_{A:B C}", s + "^D_{A:B B}", s + "^D_{:B C}", s + "^D_{:B B}", s + "^D_{A:B}"},
                {s + "^D_{A:B C} -> " + s + "^D_{A:B B}", s + "^D_{:B C} -> " + s + "^D_{:B B}", s + "^D_{A:B}"}};
    }
    if (type == "+a2" || type == "-a2") return {{type + "^D_{A:B}"}, {}};
    throw DomainError("UnknownType", "no platycosm type '" + type + "'");
}

}  // namespace platy
