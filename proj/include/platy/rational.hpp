#pragma once
// exact rationals and small fixed-size linear algebra over them
#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace platy {

using Q = mpq_class;
using Z = mpz_class;

using Vec3 = std::array<Q, 3>;
using Mat3 = std::array<std::array<Q, 3>, 3>;
using IVec3 = std::array<long long, 3>;
using IMat3 = std::array<std::array<long long, 3>, 3>;

struct DomainError : std::runtime_error {
    std::string code;
    DomainError(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

// "p/q" always carries the denominator, even when it is 1
std::string qstr(const Q& x);
// accepts "p", "p/q", "-p/q" and plain decimals like "0.25"
Q parse_q(const std::string& s);

Q qabs(const Q& x);
Q qmin(const Q& a, const Q& b);
Q qmax(const Q& a, const Q& b);
bool is_integer(const Q& x);
long long to_ll(const Q& x);  // throws unless integral and in range

// gcd of rationals: generator of the subgroup of Q they span (0 if all zero)
Q qgcd(const Q& a, const Q& b);

Mat3 mat_identity();
Mat3 to_q(const IMat3& m);
IMat3 imat_identity();
Vec3 to_q(const IVec3& v);

Mat3 mul(const Mat3& a, const Mat3& b);
Vec3 mul(const Mat3& a, const Vec3& v);
IMat3 mul(const IMat3& a, const IMat3& b);
Vec3 mul(const IMat3& a, const Vec3& v);
IVec3 mul(const IMat3& a, const IVec3& v);
Mat3 transpose(const Mat3& a);
IMat3 transpose(const IMat3& a);
Q det(const Mat3& a);
long long det(const IMat3& a);
Mat3 inverse(const Mat3& a);    // throws on singular
IMat3 inverse(const IMat3& a);  // requires det = ±1
Vec3 add(const Vec3& a, const Vec3& b);
Vec3 sub(const Vec3& a, const Vec3& b);
Vec3 neg(const Vec3& a);
Vec3 scale(const Q& s, const Vec3& a);
Q dot(const Mat3& g, const Vec3& a, const Vec3& b);  // aᵀ g b
Q norm(const Mat3& g, const Vec3& a);
bool is_zero(const Vec3& v);

// Gram of the basis given by the columns of b: bᵀ g b
Mat3 congruent(const Mat3& g, const Mat3& b);

bool positive_definite(const Mat3& g);

// dynamic matrices for rank / nullspace work
using QMat = std::vector<std::vector<Q>>;
using QVec = std::vector<Q>;

int rank(QMat m);
// basis of {x : m x = 0}, m is r×n
std::vector<QVec> nullspace(QMat m, int n);

}  // namespace platy
