#pragma once
// the ten compact platycosms: descriptors, lattices in a fixed frame, catalogs
#include "platy/conorms.hpp"

#include <map>
#include <string>
#include <vector>

namespace platy {

enum class CosmType { c1, c2, c3, c4, c6, c22, pa1, ma1, pa2, ma2 };
enum class Chirality { none, dextral, sinistral };

const std::vector<CosmType>& all_cosm_types();
std::string tag(CosmType t);              // "c1", "+a1", "-a2", ...
CosmType parse_cosm_type(const std::string& s);  // also takes the unicode minus
std::string to_string(Chirality c);
Chirality parse_chirality(const std::string& s);

struct TypeInfo {
    CosmType type;
    std::string tag;
    bool orientable;
    std::string point_group;  // orbifold symbol
    int point_group_order;
    int index;  // |N/T|
    std::vector<std::string> params;  // schema order
    bool metachiral;
};
const TypeInfo& type_info(CosmType t);

struct Descriptor {
    CosmType type = CosmType::c1;
    std::map<std::string, Q> params;
    Chirality chirality = Chirality::none;

    const Q& p(const std::string& k) const;
    bool operator==(const Descriptor& o) const {
        return type == o.type && params == o.params && chirality == o.chirality;
    }
};

// values in schema order; chirality defaults to dextral for c3/c4/c6
Descriptor make_descriptor(CosmType t, const std::vector<Q>& values, Chirality c = Chirality::none);
// "D=1,A=2/3,..." (order free)
Descriptor parse_descriptor(CosmType t, const std::string& kv, Chirality c = Chirality::none);

void validate(const Descriptor& d);  // throws InvalidParameters
Descriptor canonicalize(const Descriptor& d);
std::string name(const Descriptor& d);  // e.g. "c3^{4}_{1 1 1}", "+a1^{1}_{2:1 1}"

// c1 diagram: A..F at p01 p02 p12 p23 p13 p03, q = 0
Conorms3 c1_diagram(const Descriptor& d);
Descriptor c1_from_diagram(const Conorms3& d);

// Gram of N in the frame used for generators
Mat3 naming_lattice(const Descriptor& d);
struct TranslationLattice {
    Mat3 basis;  // columns, in N coordinates
    Mat3 gram;
    int index;
};
TranslationLattice translation_lattice(const Descriptor& d);
Q volume_sq(const Descriptor& d);

// ---- catalogs (verbatim table data)

struct NameRecord {
    std::string our_name, symbol, other_names, wolf;
    std::string cdht;
    std::vector<std::string> international;  // "19 P2_12_12_1"
    std::vector<std::string> generators;     // non-translation generators
};
const NameRecord& dictionary(CosmType t);

struct SeifertData {
    std::string row;  // the text as printed
    std::vector<std::pair<std::string, std::string>> fibrations;  // (multiplicity 1|3|inf, base orbifold)
};
const SeifertData& seifert_fibrations(CosmType t);

struct SurfaceEnd {
    std::string sign;  // "", "+", "-", "∓"
    std::string mechanism;  // subset of "gs"
    char surface;  // 'T' or 'K'
};
struct SurfaceFamily {
    bool interval;
    char member;  // 'T' or 'K' of the (2X) middle
    SurfaceEnd left, right;
    std::string multiplicity;  // "1", "3", "inf"
    bool basal;
    std::string text() const;
};
const std::vector<SurfaceFamily>& surface_families(CosmType t);

struct InfiniteRecord {
    std::string tag, name, symbol, wolf, params, recipe;
};
const std::vector<InfiniteRecord>& infinite_catalog();

struct FlatlandRow {
    std::string conorms, voronoi, delaunay, shape;
};
struct Flatland {
    std::vector<FlatlandRow> lattices;
    std::vector<std::string> manifolds;    // T, K
    std::vector<std::string> infinite;     // plane, cylinder, Moebius cylinder
    std::vector<std::string> orbifolds;    // the 17 symbols
};
const Flatland& flatland_catalog();

// ±a1: the perpendal family over a primitive (m,n) in <x,y>: "2K" or "2T"
std::string classify_basal_vector(const Descriptor& d, long long m, long long n);

}  // namespace platy
