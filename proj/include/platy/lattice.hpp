#pragma once
// lattices in Q^n given by generators: echelon bases, membership, intersections
#include "platy/rational.hpp"

namespace platy {

using ZMat = std::vector<std::vector<Z>>;

// row-style Hermite form; returns H and unimodular U with U·M = H
struct HnfResult {
    ZMat H;
    ZMat U;
    int rank = 0;
};
HnfResult hnf(const ZMat& m);

// Smith invariant factors of an integer matrix (nonzero diagonal only)
std::vector<Z> smith_diagonal(ZMat m);

// echelon basis (rows) of the Z-span of rational vectors of length n
std::vector<QVec> echelon_basis(const std::vector<QVec>& gens, int n);
bool echelon_contains(const std::vector<QVec>& rows, QVec v);

// full rank lattice in Q^3 (basis rows in echelon form)
struct Lattice3 {
    std::array<Vec3, 3> b;
    Mat3 basis_cols() const;  // columns are basis vectors
    Vec3 coords(const Vec3& v) const;
    bool contains(const Vec3& v) const;
};

// throws NotCocompact when the span has rank < 3
Lattice3 lattice_from(const std::vector<Vec3>& gens);
int span_rank(const std::vector<Vec3>& gens);
Q covolume_ratio(const Lattice3& sub, const Lattice3& sup);  // |sup : sub|
bool same_lattice(const Lattice3& a, const Lattice3& b);

// v ∈ L + span(sub)?
bool contains_mod_subspace(const Lattice3& L, const std::vector<Vec3>& sub, const Vec3& v);

// generator of L ∩ R·dir (positive multiple of dir)
Vec3 line_generator(const Lattice3& L, const Vec3& dir);

// basis of {v ∈ L : f(v) = 0 for every functional f} (functionals as coefficient rows)
std::vector<Vec3> sublattice_kernel(const Lattice3& L, const std::vector<Vec3>& functionals);

// Z-span of vectors all lying in a subspace with the given basis; returns a basis of the span
std::vector<Vec3> span_basis(const std::vector<Vec3>& gens);

}  // namespace platy
