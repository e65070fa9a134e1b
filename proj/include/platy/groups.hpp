#pragma once
// exact affine isometries in lattice coordinates, and the platycosm groups built from them
#include "platy/cosmos.hpp"
#include "platy/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace platy {

// x -> L x + t (coordinates w.r.t. a basis of the naming lattice)
struct Affine {
    Mat3 L;
    Vec3 t;
    bool operator==(const Affine& o) const { return L == o.L && t == o.t; }
};

Affine affine_identity();
Affine translation(const Vec3& v);
Affine compose(const Affine& a, const Affine& b);  // a after b
Affine inverse(const Affine& a);
Affine power(const Affine& a, long long n);
bool is_translation(const Affine& a);
int linear_order(const Mat3& L);  // throws unless L^k = I for some k <= 6
Mat3 fixed_projector(const Mat3& L);  // (1/k) sum L^i
bool is_isometry(const Mat3& gram, const Affine& a);

struct SpaceGroup {
    Mat3 gram;
    std::vector<Affine> gens;
};

// ---- presentations

struct Presentation {
    std::vector<std::string> gens;
    std::vector<std::string> relators;      // words equal to 1
    std::vector<std::string> translations;  // words generating T
};
const Presentation& presentation(CosmType t);

using Word = std::vector<std::pair<int, int>>;  // (generator, exponent)
Word parse_word(const std::string& s, const std::vector<std::string>& gens);
Affine evaluate(const Word& w, const std::vector<Affine>& gens);
int exponent_sum(const Word& w, int gen);

SpaceGroup standard_generators(const Descriptor& d);
bool verify_relations(const Descriptor& d);

// ---- structure

struct GroupStructure {
    std::vector<Affine> reps;  // one per point-group element, reps[0] = identity
    Lattice3 T;
    int find(const Mat3& L) const;  // index into reps or -1
    bool contains(const Affine& g) const;
};
GroupStructure structure(const SpaceGroup& g);

bool has_fixed_point(const Affine& g, const Lattice3& T);
bool fixed_point_free(const SpaceGroup& g);

// torsion invariant factors followed by one "inf" per free generator
std::vector<std::string> homology(CosmType t);
int mod2_rank(CosmType t);

Descriptor recognize(const SpaceGroup& g);

// ---- double covers

struct SignHom {
    std::vector<int> signs;  // per presentation generator
};
std::vector<SignHom> sign_homomorphisms(CosmType t);
SpaceGroup kernel_subgroup(const Descriptor& d, const SignHom& h);
Descriptor table_cover(const Descriptor& d, const SignHom& h);
std::string sign_string(CosmType t, const SignHom& h);  // in the table's columns, e.g. "X- Y+ Z+"

struct Cover {
    SignHom h;
    Descriptor table;
    Descriptor recognized;
    bool agrees;
};
std::vector<Cover> double_covers(const Descriptor& d);

// ---- automorphisms

std::vector<Affine> evaluate_images(const Descriptor& d, const std::vector<std::string>& images);
bool is_automorphism(const Descriptor& d, const std::vector<std::string>& images);
// the affine map a with a g a^-1 = image(g); nullopt if none exists
std::optional<Affine> realize_automorphism(const Descriptor& d, const std::vector<std::string>& images);
bool normalizes(const Descriptor& d, const Affine& a);
bool is_inner(const Descriptor& d, const Affine& a);  // throws DoesNotNormalize
const std::vector<std::vector<std::string>>& rigid_automorphisms(CosmType t);
bool c22_outer_relations_check(std::vector<std::string>* log = nullptr);

// ---- appendix properties

bool helicosm_splits(const Descriptor& d);
std::vector<int> rotation_orders_2d(const std::array<std::array<Q, 2>, 2>& g);

}  // namespace platy
