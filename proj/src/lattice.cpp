#include "platy/lattice.hpp"

#include <cstdlib>

namespace platy {

static Z zfloordiv(const Z& a, const Z& b) {
    Z q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

static void row_axpy(std::vector<Z>& dst, const Z& f, const std::vector<Z>& src) {
    for (size_t j = 0; j < dst.size(); ++j) dst[j] -= f * src[j];
}

HnfResult hnf(const ZMat& m) {
    HnfResult res;
    res.H = m;
    size_t k = m.size();
    size_t n = k ? m[0].size() : 0;
    res.U.assign(k, std::vector<Z>(k, 0));
    for (size_t i = 0; i < k; ++i) res.U[i][i] = 1;
    auto& H = res.H;
    auto& U = res.U;
    size_t r = 0;
    for (size_t c = 0; c < n && r < k; ++c) {
        while (true) {
            size_t best = k;
            for (size_t i = r; i < k; ++i)
                if (H[i][c] != 0 && (best == k || abs(H[i][c]) < abs(H[best][c]))) best = i;
            if (best == k) break;
            std::swap(H[r], H[best]);
            std::swap(U[r], U[best]);
            bool clean = true;
            for (size_t i = r + 1; i < k; ++i) {
                if (H[i][c] == 0) continue;
                Z q = zfloordiv(H[i][c], H[r][c]);
                row_axpy(H[i], q, H[r]);
                row_axpy(U[i], q, U[r]);
                if (H[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (H[r][c] == 0) continue;
        if (H[r][c] < 0) {
            for (auto& x : H[r]) x = -x;
            for (auto& x : U[r]) x = -x;
        }
        for (size_t i = 0; i < r; ++i) {
            Z q = zfloordiv(H[i][c], H[r][c]);
            if (q == 0) continue;
            row_axpy(H[i], q, H[r]);
            row_axpy(U[i], q, U[r]);
        }
        ++r;
    }
    res.rank = static_cast<int>(r);
    return res;
}

std::vector<Z> smith_diagonal(ZMat a) {
    std::vector<Z> diag;
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero pivot in the remaining block
        size_t pi = rows, pj = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
        if (pi == rows) break;
        std::swap(a[t], a[pi]);
        for (auto& row : a) std::swap(row[t], row[pj]);
        bool again = false;
        for (size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            Z q = zfloordiv(a[i][t], a[t][t]);
            row_axpy(a[i], q, a[t]);
            if (a[i][t] != 0) again = true;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            Z q = zfloordiv(a[t][j], a[t][t]);
            for (size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][t];
            if (a[t][j] != 0) again = true;
        }
        if (again) continue;
        // divisibility condition
        bool fixed = false;
        for (size_t i = t + 1; i < rows && !fixed; ++i)
            for (size_t j = t + 1; j < cols; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (size_t jj = 0; jj < cols; ++jj) a[t][jj] += a[i][jj];
                    fixed = true;
                    break;
                }
        if (fixed) continue;
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

static Z lcm_denominators(const std::vector<QVec>& gens) {
    Z d = 1;
    for (auto& v : gens)
        for (auto& x : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
    return d;
}

std::vector<QVec> echelon_basis(const std::vector<QVec>& gens, int n) {
    if (gens.empty()) return {};
    Z d = lcm_denominators(gens);
    ZMat m;
    for (auto& v : gens) {
        std::vector<Z> row(n);
        for (int j = 0; j < n; ++j) {
            Q s = v[j] * d;
            row[j] = s.get_num();
        }
        m.push_back(row);
    }
    auto h = hnf(m);
    std::vector<QVec> out;
    for (int i = 0; i < h.rank; ++i) {
        QVec row(n);
        for (int j = 0; j < n; ++j) {
            row[j] = Q(h.H[i][j], d);
            row[j].canonicalize();
        }
        out.push_back(row);
    }
    return out;
}

bool echelon_contains(const std::vector<QVec>& rows, QVec v) {
    for (auto& r : rows) {
        size_t c = 0;
        while (c < r.size() && r[c] == 0) ++c;
        if (c == r.size()) continue;
        for (size_t j = 0; j < c; ++j)
            if (v[j] != 0) return false;
        Q k = v[c] / r[c];
        if (!is_integer(k)) return false;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= k * r[j];
    }
    for (auto& x : v)
        if (x != 0) return false;
    return true;
}

static QVec as_qvec(const Vec3& v) { return {v[0], v[1], v[2]}; }

Mat3 Lattice3::basis_cols() const {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = b[j][i];
    return m;
}

Vec3 Lattice3::coords(const Vec3& v) const { return mul(inverse(basis_cols()), v); }

bool Lattice3::contains(const Vec3& v) const {
    auto c = coords(v);
    return is_integer(c[0]) && is_integer(c[1]) && is_integer(c[2]);
}

int span_rank(const std::vector<Vec3>& gens) {
    QMat m;
    for (auto& g : gens) m.push_back(as_qvec(g));
    return rank(m);
}

Lattice3 lattice_from(const std::vector<Vec3>& gens) {
    std::vector<QVec> g;
    for (auto& v : gens) g.push_back(as_qvec(v));
    auto rows = echelon_basis(g, 3);
    if (rows.size() != 3) throw DomainError("NotCocompact", "translation rank " + std::to_string(rows.size()) + " < 3");
    Lattice3 L;
    for (int i = 0; i < 3; ++i) L.b[i] = {rows[i][0], rows[i][1], rows[i][2]};
    return L;
}

Q covolume_ratio(const Lattice3& sub, const Lattice3& sup) {
    return qabs(Q(det(sub.basis_cols()) / det(sup.basis_cols())));
}

bool same_lattice(const Lattice3& a, const Lattice3& b) {
    for (int i = 0; i < 3; ++i)
        if (!a.contains(b.b[i]) || !b.contains(a.b[i])) return false;
    return true;
}

bool contains_mod_subspace(const Lattice3& L, const std::vector<Vec3>& sub, const Vec3& v) {
    if (sub.empty()) return L.contains(v);
    QMat m;
    for (auto& s : sub) m.push_back(as_qvec(s));
    auto ann = nullspace(m, 3);
    if (ann.empty()) return true;
    auto project = [&](const Vec3& u) {
        QVec r;
        for (auto& f : ann) r.push_back(f[0] * u[0] + f[1] * u[1] + f[2] * u[2]);
        return r;
    };
    std::vector<QVec> gens;
    for (auto& bv : L.b) gens.push_back(project(bv));
    auto rows = echelon_basis(gens, static_cast<int>(ann.size()));
    return echelon_contains(rows, project(v));
}

Vec3 line_generator(const Lattice3& L, const Vec3& dir) {
    if (is_zero(dir)) throw DomainError("Degenerate", "zero direction");
    auto c = L.coords(dir);
    Q g = qgcd(qgcd(c[0], c[1]), c[2]);
    return scale(1 / g, dir);
}

std::vector<Vec3> sublattice_kernel(const Lattice3& L, const std::vector<Vec3>& functionals) {
    if (functionals.empty()) return {L.b[0], L.b[1], L.b[2]};
    size_t k = functionals.size();
    // M is 3×k: M[i][j] = f_j(b_i), scaled column-wise to integers
    std::vector<QVec> cols;
    for (auto& f : functionals) {
        QVec col;
        for (auto& bv : L.b) col.push_back(f[0] * bv[0] + f[1] * bv[1] + f[2] * bv[2]);
        cols.push_back(col);
    }
    ZMat m(3, std::vector<Z>(k));
    for (size_t j = 0; j < k; ++j) {
        Z d = lcm_denominators({cols[j]});
        for (int i = 0; i < 3; ++i) {
            Q s = cols[j][i] * d;
            m[i][j] = s.get_num();
        }
    }
    auto h = hnf(m);
    std::vector<Vec3> out;
    for (int i = h.rank; i < 3; ++i) {
        Vec3 v{0, 0, 0};
        for (int t = 0; t < 3; ++t) v = add(v, scale(Q(h.U[i][t]), L.b[t]));
        out.push_back(v);
    }
    return out;
}

std::vector<Vec3> span_basis(const std::vector<Vec3>& gens) {
    std::vector<QVec> g;
    for (auto& v : gens) g.push_back(as_qvec(v));
    auto rows = echelon_basis(g, 3);
    std::vector<Vec3> out;
    for (auto& r : rows) out.push_back({r[0], r[1], r[2]});
    return out;
}

}  // namespace platy
