#include "platy/voronoi.hpp"

#include "platy/enumerate.hpp"

#include <algorithm>
#include <map>

namespace platy {

static int char_of(const IVec3& x) {
    return static_cast<int>((x[0] & 1) | ((x[1] & 1) << 1) | ((x[2] & 1) << 2));
}

std::array<std::vector<IVec3>, 7> coset_minimal_vectors(const Mat3& gram) {
    if (!positive_definite(gram)) throw DomainError("NotPositiveDefinite", "Gram matrix is not positive definite");
    // the coset representative with 0/1 coefficients bounds every coset minimum
    Q bound = 0;
    for (int c = 1; c < 8; ++c) {
        Vec3 v{Q(c & 1), Q((c >> 1) & 1), Q((c >> 2) & 1)};
        bound = qmax(bound, norm(gram, v));
    }
    std::array<std::vector<IVec3>, 7> best;
    std::array<Q, 7> val;
    std::array<bool, 7> have{};
    for (auto& x : short_vectors(qmat(gram), bound)) {
        IVec3 v{x[0], x[1], x[2]};
        int c = char_of(v);
        if (c == 0) continue;
        Q n = norm(gram, to_q(v));
        if (!have[c - 1] || n < val[c - 1]) {
            have[c - 1] = true;
            val[c - 1] = n;
            best[c - 1] = {v};
        } else if (n == val[c - 1])
            best[c - 1].push_back(v);
    }
    return best;
}

std::array<Q, 7> coset_minima(const Mat3& gram) {
    auto vecs = coset_minimal_vectors(gram);
    std::array<Q, 7> out;
    for (int c = 0; c < 7; ++c) out[c] = norm(gram, to_q(vecs[c].front()));
    return out;
}

VoronoiCell voronoi_cell(const Mat3& gram) {
    VoronoiCell cell;
    auto vecs = coset_minimal_vectors(gram);
    for (auto& vs : vecs)
        if (vs.size() == 2) cell.relevant.insert(cell.relevant.end(), vs.begin(), vs.end());
    size_t k = cell.relevant.size();
    // half-space x.(G v) <= |v|^2 / 2
    std::vector<Vec3> normal(k);
    std::vector<Q> rhs(k);
    for (size_t i = 0; i < k; ++i) {
        Vec3 v = to_q(cell.relevant[i]);
        normal[i] = mul(gram, v);
        rhs[i] = norm(gram, v) / 2;
    }
    std::map<std::array<std::string, 3>, Vec3> seen;
    for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b)
            for (size_t c = b + 1; c < k; ++c) {
                Mat3 m{normal[a], normal[b], normal[c]};
                if (det(m) == 0) continue;
                Vec3 x = mul(inverse(m), Vec3{rhs[a], rhs[b], rhs[c]});
                bool ok = true;
                for (size_t i = 0; i < k && ok; ++i) {
                    Q lhs = normal[i][0] * x[0] + normal[i][1] * x[1] + normal[i][2] * x[2];
                    ok = lhs <= rhs[i];
                }
                if (ok) seen[{qstr(x[0]), qstr(x[1]), qstr(x[2])}] = x;
            }
    for (auto& [key, x] : seen) cell.vertices.push_back(x);
    cell.circumradius_sq = 0;
    for (auto& x : cell.vertices) cell.circumradius_sq = qmax(cell.circumradius_sq, norm(gram, x));
    for (size_t i = 0; i < k; ++i) {
        int on = 0;
        for (auto& x : cell.vertices)
            if (normal[i][0] * x[0] + normal[i][1] * x[1] + normal[i][2] * x[2] == rhs[i]) ++on;
        if (on >= 3) ++cell.faces;
    }
    return cell;
}

Conorms3 conorms_by_oracle(const Mat3& gram) {
    auto m = coset_minima(gram);
    Vonorms3 v;
    for (int c = 0; c < 7; ++c) v.v[c] = m[c];
    return conorms_from_vonorms(v);
}

}  // namespace platy
