// static table data; symbols keep the source typography where it has no plain form
#include "platy/cosmos.hpp"

namespace platy {

const NameRecord& dictionary(CosmType t) {
    static const std::vector<NameRecord> recs = {
        {"torocosm", "c1", "3-torus", "G_1", "(\\circ)", {"1 P1"}, {}},
        {"dicosm", "c2", "half turn space", "G_2", "(2_12_12_12_1)=(\\bar\\times\\bar\\times)", {"4 P2_1"},
         {"(-x,-y,z+1/2)"}},
        {"tricosm", "c3", "one-third turn space", "G_3", "(3_13_13_1)", {"144 P3_1", "145 P3_2"}, {"(-x-y,x,z+1/3)"}},
        {"tetracosm", "c4", "quarter turn space", "G_4", "(4_14_12_1)", {"76 P4_1", "78 P4_3"}, {"(-y,x,z+1/4)"}},
        {"hexacosm", "c6", "one-sixth turn space", "G_5", "(6_13_12_1)", {"169 P6_1", "170 P6_5"}, {"(x+y,-x,z+1/6)"}},
        {"didicosm", "c22", "Hantzsche-Wendt space", "G_6", "(2_12_1\\bar\\times)", {"19 P2_12_12_1"},
         {"(-x,y+1/2,-z+1/2)", "(x+1/2,-y,-z)"}},
        {"first amphicosm", "+a1", "Klein bottle times circle", "B_1", "(\\bar\\circ_0)=(*{:}{*}{:})=(\\times\\times_0)",
         {"7 Pc"}, {"(x+1/2,y,-z)"}},
        {"second amphicosm", "-a1", "", "B_2", "(\\bar\\circ_1)=(*{:}\\times)=(\\times\\times_1)", {"9 Cc"},
         {"(x+1/2,z,y)"}},
        {"first amphidicosm", "+a2", "", "B_3", "(2_12_1{*}{:})=(\\bar*{:}\\bar*{:})=(\\bar\\times\\times_0)",
         {"29 Pca2_1"}, {"(-x,y,z+1/2)", "(x+1/2,-y,z)"}},
        {"second amphidicosm", "-a2", "", "B_4", "(2_12_1\\times)=(*{:}\\bar\\times)=(\\bar\\times\\times_1)",
         {"33 Pa2_1"}, {"(-x,y+1/2,z+1/2)", "(x+1/2,-y,z)"}},
    };
    return recs[static_cast<int>(t)];
}

const SeifertData& seifert_fibrations(CosmType t) {
    static const std::vector<SeifertData> rows = {
        {"infinitely many fibrations, all of type o.", {{"inf", "o"}}},
        {"one fibration of type 2222, infinity of type ××.", {{"1", "2222"}, {"inf", "××"}}},
        {"one fibration of type 333.", {{"1", "333"}}},
        {"one fibration of type 444.", {{"1", "444"}}},
        {"one fibration of type 632.", {{"1", "632"}}},
        {"just three fibrations, all of type 22×.", {{"3", "22×"}}},
        {"one of type o, infinity of types **, ××.", {{"1", "o"}, {"inf", "**"}, {"inf", "××"}}},
        {"one of type o, infinity of types *×, ××.", {{"1", "o"}, {"inf", "*×"}, {"inf", "××"}}},
        {"just three fibrations, of types 22*, **, ××.", {{"1", "22*"}, {"1", "**"}, {"1", "××"}}},
        {"just three fibrations, of types 22×, *×, ××.", {{"1", "22×"}, {"1", "*×"}, {"1", "××"}}},
    };
    return rows[static_cast<int>(t)];
}

std::string SurfaceFamily::text() const {
    auto end = [](const SurfaceEnd& e) { return e.sign + "1" + e.mechanism + e.surface; };
    std::string mid = std::string("(2") + member + ")";
    std::string body = interval ? "[" + end(left) + " " + mid + " " + end(right) + "]" : mid;
    return body + "^" + (multiplicity == "inf" ? std::string("∞") : multiplicity);
}

const std::vector<SurfaceFamily>& surface_families(CosmType t) {
    // a row without a semicolon is listed as basal
    const SurfaceEnd none{"", "", 'T'};
    auto circ = [&](char m, const char* mult, bool basal) { return SurfaceFamily{false, m, none, none, mult, basal}; };
    auto iv = [&](SurfaceEnd l, char m, SurfaceEnd r, const char* mult, bool basal) {
        return SurfaceFamily{true, m, l, r, mult, basal};
    };
    static const std::vector<std::vector<SurfaceFamily>> rows = {
        {circ('T', "inf", true)},
        {circ('T', "1", true), iv({"", "s", 'K'}, 'T', {"", "s", 'K'}, "inf", false)},
        {circ('T', "1", true)},
        {circ('T', "1", true)},
        {circ('T', "1", true)},
        {iv({"∓", "s", 'K'}, 'T', {"∓", "s", 'K'}, "3", true)},
        {iv({"+", "g", 'T'}, 'T', {"+", "g", 'T'}, "1", true), circ('K', "inf", false), circ('T', "inf", false)},
        {iv({"-", "g", 'T'}, 'T', {"-", "g", 'T'}, "1", true), circ('K', "inf", false), circ('T', "inf", false)},
        {iv({"+", "gs", 'K'}, 'K', {"+", "gs", 'K'}, "1", true), circ('K', "1", false),
         iv({"∓", "s", 'K'}, 'T', {"∓", "g", 'T'}, "1", false)},
        {iv({"-", "g", 'T'}, 'T', {"-", "s", 'K'}, "1", true), circ('K', "1", false),
         iv({"∓", "s", 'K'}, 'T', {"∓", "g", 'T'}, "1", false)},
    };
    return rows[static_cast<int>(t)];
}

const std::vector<InfiniteRecord>& infinite_catalog() {
    static const std::vector<InfiniteRecord> recs = {
        {"EUC", "Euclidean Space", "EUC", "E", "", "trivial group"},
        {"CPS", "Circular Product space", "CPS_A(θ)", "S^θ_1", "A, θ",
         "screw motion of angle θ and length √A"},
        {"CMS", "Circular Möbius space", "CMS_A", "S_2", "A", "glide reflection of length √A"},
        {"TPS", "Toroidal Product space", "TPS_{A B C}", "T_1", "A, B, C",
         "2D lattice of translations whose superbase v0,v1,v2 has conorms A, B, C"},
        {"TMS", "Toroidal Möbius space", "TMS_{A B:C}", "T_2", "A, B, C",
         "translations through v0 and v1 replaced by glides with the reflection in the base plane; v2 stays a translation"},
        {"KPS", "Kleinian Product space", "KPS^A_B", "K_2", "A, B",
         "translation along v1 of length √A; glide along v2 ⊥ v1 of length √B, mirror orthogonal to the base plane"},
        {"+KMS", "chiral Kleinian Möbius space", "+KMS^A_B", "K_1", "A, B",
         "as KPS, with the glide composed with the base-plane reflection (a screw motion)"},
        {"-KMS", "achiral Kleinian Möbius space", "-KMS^A_B", "K_3", "A, B",
         "as KPS, with the translation composed with the base-plane reflection (a glide)"},
    };
    return recs;
}

const Flatland& flatland_catalog() {
    static const Flatland f = {
        {
            {"A B C", "hexagonal", "scalene triangle", "generic lattice"},
            {"A A B", "hexagonal", "isosceles triangle", "rhombic lattice"},
            {"A A A", "hexagonal", "equilateral triangle", "hexagonal lattice"},
            {"A B 0", "rectangular", "rectangle", "rectangular lattice"},
            {"A A 0", "rectangular", "square", "square lattice"},
        },
        {"torus T_{A B C}", "Klein bottle K^A_B"},
        {"Euclidean Plane R^2 (= T_{∞ ∞} = K^∞_∞)", "(infinite) Cylinder C_A (= T_{A ∞} = K^A_∞)",
         "Möbius Cylinder M_B (= K^∞_B)"},
        {"*632", "632", "*442", "4*2", "442", "*333", "3*3", "333", "*2222", "2*22", "22*", "22×", "2222", "**", "*×", "××",
         "o"},
    };
    return f;
}

}  // namespace platy
