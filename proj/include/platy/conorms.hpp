#pragma once
// conorm / vonorm calculus on the Fano plane
//
// positions 0..6 = p01 p02 p03 p12 p13 p23 q, with characters 1 2 4 3 5 6 7
// (bit i set when v_{i+1} is involved); a triple is a line iff the characters xor to 0.
// vonorms are indexed by the coset character c = 1..7 of L/2L (bit i = coefficient of v_{i+1}),
// stored at index c-1; the coset c corresponds to the line of points whose character
// meets c in an even number of bits.
#include "platy/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace platy {

enum Pos { P01 = 0, P02, P03, P12, P13, P23, PQ };

struct Conorms3 {
    std::array<Q, 7> v;
    bool operator==(const Conorms3& o) const { return v == o.v; }
};
struct Vonorms3 {
    std::array<Q, 7> v;
    bool operator==(const Vonorms3& o) const { return v == o.v; }
};
struct Conorms2 {
    std::array<Q, 3> v;
    bool operator==(const Conorms2& o) const { return v == o.v; }
};

using Superbase3 = std::array<std::array<Q, 4>, 4>;
using Perm7 = std::array<int, 7>;

extern const std::array<int, 7> kCharacter;
extern const std::array<std::array<int, 3>, 7> kLines;  // sorted, lexicographic order
const char* pos_name(int p);

bool collinear(int a, int b, int c);
int third_point(int a, int b);
std::array<int, 3> line_of_coset(int c);  // c in 1..7
int coset_of_line(const std::array<int, 3>& line);
const std::vector<Perm7>& collineations();  // all 168, identity first
Conorms3 permute(const Perm7& p, const Conorms3& d);  // result[p[i]] = d[i]
const std::vector<std::array<int, 3>>& triangles();

Superbase3 superbase_from_gram(const Mat3& g);
Conorms3 putative_conorms(const Superbase3& s);
Conorms3 conorms_of_gram(const Mat3& g);  // putative then reduce3

struct ReduceTrace {
    std::vector<Conorms3> steps;  // includes the input and the output
};
Conorms3 reduce3(const Conorms3& d, ReduceTrace* trace = nullptr);
bool is_reduced(const Conorms3& d);

Conorms2 reduce2(const Conorms2& d, std::vector<Conorms2>* trace = nullptr);
Conorms2 conorms2_from_gram(const std::array<std::array<Q, 2>, 2>& g);
std::array<std::array<Q, 2>, 2> gram2_from_conorms(const Conorms2& d);
Q determinant2(const Conorms2& d);  // AB + BC + CA

Vonorms3 vonorms(const Conorms3& d);
Conorms3 conorms_from_vonorms(const Vonorms3& v);
Q determinant(const Conorms3& d);
Q second_determinant(const Conorms3& d);
Q minimal_vonorm(const Conorms3& d);

// Gram matrix realizing a reduced diagram (basis v1 v2 v3 of the obtuse superbase,
// after a collineation moving a zero to q)
Mat3 gram_of(const Conorms3& d);

// G placement: labels A..G as positions
struct Placement {
    int G;
    std::array<int, 6> pos;  // positions of A B C D E F
    std::array<Q, 6> val;    // their values
};
std::vector<Placement> all_placements(const Conorms3& d);  // one per zero
Placement canonical_g_placement(const Conorms3& d);
Q covering_radius_sq(const Conorms3& d);
Q edge_length_sq(const Conorms3& d, int position);
Conorms3 dual_conorms(const Conorms3& d);

// canonical representative under the 168 collineations (q = 0, then lexicographically least)
Conorms3 canonical(const Conorms3& d);
bool lattices_isometric(const Conorms3& a, const Conorms3& b);

Conorms3 scaled(const Conorms3& d, const Q& s);

}  // namespace platy
