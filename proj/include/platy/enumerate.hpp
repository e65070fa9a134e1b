#pragma once
// Fincke-Pohst style enumeration: float bounds with slack, exact filtering
#include "platy/rational.hpp"

#include <vector>

namespace platy {

// all integer x with (x - c)ᵀ G (x - c) <= bound, G positive definite n×n
std::vector<std::vector<long long>> close_vectors(const QMat& G, const QVec& c, const Q& bound);

// squared distance from c to the nearest lattice point, and one minimizer
struct ClosestResult {
    Q dist_sq;
    std::vector<long long> x;
};
ClosestResult closest_vector(const QMat& G, const QVec& c);

// nonzero vectors with norm <= bound
std::vector<std::vector<long long>> short_vectors(const QMat& G, const Q& bound);

QMat qmat(const Mat3& g);

}  // namespace platy
