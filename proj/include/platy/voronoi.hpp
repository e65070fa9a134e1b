#pragma once
// brute-force lattice oracles: coset minima of L/2L and the exact Voronoi cell
#include "platy/conorms.hpp"

namespace platy {

// minimal norm in each nonzero coset of L/2L, indexed by coset character (bit i = coefficient
// of basis vector i mod 2), stored at character-1
std::array<Q, 7> coset_minima(const Mat3& gram);
// all vectors attaining each coset minimum
std::array<std::vector<IVec3>, 7> coset_minimal_vectors(const Mat3& gram);

struct VoronoiCell {
    std::vector<IVec3> relevant;  // strict Voronoi vectors (one per facet)
    std::vector<Vec3> vertices;
    int faces = 0;
    Q circumradius_sq;
};
VoronoiCell voronoi_cell(const Mat3& gram);

// reduced diagram of the lattice computed from coset minima (independent of reduce3)
Conorms3 conorms_by_oracle(const Mat3& gram);

}  // namespace platy
