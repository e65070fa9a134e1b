#pragma once
// systole, injectivity radius, diameter: closed forms, orbit lattices, brute-force oracles
#include "platy/cosmos.hpp"
#include "platy/groups.hpp"

#include <optional>

namespace platy {

// a named candidate value, e.g. {"B+C+D", 5}
struct Term {
    std::string name;
    Q value;
};

// squared length of the shortest closed geodesic; the injectivity radius is half that length
std::vector<Term> systole_terms(const Descriptor& d);
Q systole_sq(const Descriptor& d, std::string* witness = nullptr);
// min over g != 1 of the displacement |P_r(t_r + λ)|², by exact closest-vector search
Q systole_oracle(const Descriptor& d);

struct DiameterForm {
    Q value;  // squared
    bool exact;  // false: orbit-lattice lower bound
    std::string witness;
};
DiameterForm diameter_form(const Descriptor& d);
Q diameter_sq(const Descriptor& d);

struct MetricReport {
    Q systole_sq, injectivity_radius_sq, diameter_sq;
    std::string diameter_kind;  // "exact" | "orbit_lattice_bound"
    std::string witness;  // systole minimizer
    std::string diameter_witness;
};
MetricReport metric_report(const Descriptor& d);

// ---- orbit lattice expressions (all are 4R²)

struct DidiTerms {
    Q alpha, beta, gamma, delta;
};
DidiTerms didicosm_terms(const Q& A, const Q& B, const Q& C);

struct SecondAmphiTerms {
    Q I, II, III, IV, V;
};
SecondAmphiTerms second_amphi_terms(const Q& A, const Q& B, const Q& C, const Q& D);
// first orbit lattice of -a1: max(min(I..IV), min(I,V))
Q second_amphi_max_of_mins(const Q& A, const Q& B, const Q& C, const Q& D);
// min(I, max(II,V), max(III,V), max(IV,V))
Q second_amphi_min_of_four(const Q& A, const Q& B, const Q& C, const Q& D);
// the case split as printed; nullopt where no case applies
std::optional<Q> second_amphi_piecewise(const Q& A, const Q& B, const Q& C, const Q& D);

struct OrbitLattice {
    Vec3 point;  // N coordinates
    Mat3 gram;   // of a basis of the orbit lattice
    Q covering_radius_sq;  // from the exact Voronoi cell
};
// one per distinct shape, found among points of (1/den)N
std::vector<OrbitLattice> orbit_lattices(const Descriptor& d, int den = 8);

// ---- oracles

Q covering_radius_oracle(const Conorms3& d);

struct OracleConfig {
    int grid = 0;  // points per naming-lattice edge; 0 picks the smallest n with spacing <= systole/8
};
struct DiameterInterval {
    Q lower, upper;  // squared
    int grid;
    Vec3 p, q;  // a grid pair at distance² lower, naming-lattice coordinates
};
DiameterInterval diameter_oracle(const Descriptor& d, const OracleConfig& cfg = {});

}  // namespace platy
