#pragma once
// Voronoi / Bravais / BraVo classification of 2- and 3-dimensional lattices
#include "platy/conorms.hpp"

#include <string>
#include <vector>

namespace platy {

enum class VoronoiType { tO, hD, rD, hP, rC };
std::string to_string(VoronoiType t);

struct BravaisClass {
    std::string name;
    int symmetry_factor;
};

struct BravoClass {
    char letter;
    VoronoiType voronoi;
    std::string orbifold;  // point group, orbifold notation as in the class diagrams
    int symmetry_factor;
};

VoronoiType voronoi_type(const Conorms3& d);
BravoClass bravo_class(const Conorms3& d);
// letters of every template the diagram satisfies (for exclusivity checks)
std::vector<char> satisfied_templates(const Conorms3& d);
BravaisClass bravais_class(char letter);
BravoClass bravo_info(char letter);
const std::vector<char>& all_letters();
std::vector<BravaisClass> all_bravais_classes();

// integer matrices M with Mᵀ G M = G
std::vector<IMat3> lattice_automorphisms(const Mat3& gram);

struct Lattice2Class {
    std::string conorm_pattern;  // "A B C", "A A B", ...
    std::string voronoi;         // hexagonal | rectangular
    std::string delaunay;
    std::string shape;
    int order_flag;  // rhombic: sign of (A - B) for the repeated value A vs the odd one B; 0 otherwise
};
Lattice2Class classify2d(const Conorms2& d);

// 2x2 integer automorphisms of a 2D Gram matrix
std::vector<std::array<std::array<long long, 2>, 2>> lattice2_automorphisms(const std::array<std::array<Q, 2>, 2>& g);

struct PlatycosmBravais {
    std::vector<std::string> patterns;
    std::vector<std::string> chains;
};
PlatycosmBravais platycosm_bravais_types(const std::string& type);

}  // namespace platy
