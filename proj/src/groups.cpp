#include "platy/groups.hpp"

#include "platy/bravo.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace platy {

namespace {

Mat3 zero3() {
    Mat3 m;
    for (auto& r : m)
        for (auto& x : r) x = 0;
    return m;
}

Mat3 diag(int a, int b, int c) {
    Mat3 m = zero3();
    m[0][0] = a;
    m[1][1] = b;
    m[2][2] = c;
    return m;
}

Mat3 rows(std::initializer_list<std::initializer_list<int>> r) {
    Mat3 m = zero3();
    int i = 0;
    for (auto& row : r) {
        int j = 0;
        for (int x : row) m[i][j++] = x;
        ++i;
    }
    return m;
}

Mat3 scale_mat(int s) { return diag(s, s, s); }

Mat3 msub(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] - b[i][j];
    return r;
}

std::vector<Vec3> columns(const Mat3& m) {
    std::vector<Vec3> out;
    for (int j = 0; j < 3; ++j) {
        Vec3 c{m[0][j], m[1][j], m[2][j]};
        if (!is_zero(c)) out.push_back(c);
    }
    return out;
}

// basis of {x : M x = x}
std::vector<Vec3> fixed_space(const std::vector<Mat3>& Ls) {
    QMat m;
    for (auto& L : Ls) {
        auto d = msub(L, mat_identity());
        for (auto& r : d) m.push_back(QVec(r.begin(), r.end()));
    }
    if (m.empty()) return {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
    std::vector<Vec3> out;
    for (auto& v : nullspace(m, 3)) out.push_back({v[0], v[1], v[2]});
    return out;
}

Vec3 eigen_line(const Mat3& L, int eig) {
    Mat3 d = msub(L, scale_mat(eig));
    QMat m;
    for (auto& r : d) m.push_back(QVec(r.begin(), r.end()));
    auto ns = nullspace(m, 3);
    if (ns.size() != 1) throw DomainError("Unrecognized", "expected a one-dimensional eigenspace");
    return {ns[0][0], ns[0][1], ns[0][2]};
}

// particular solution of M x = b, M given as rows
std::optional<QVec> solve(QMat M, QVec b) {
    size_t rows_n = M.size(), n = rows_n ? M[0].size() : 0;
    for (size_t i = 0; i < rows_n; ++i) M[i].push_back(b[i]);
    std::vector<int> pivcol;
    size_t r = 0;
    for (size_t c = 0; c < n && r < rows_n; ++c) {
        size_t p = r;
        while (p < rows_n && M[p][c] == 0) ++p;
        if (p == rows_n) continue;
        std::swap(M[p], M[r]);
        Q inv = 1 / M[r][c];
        for (auto& x : M[r]) x *= inv;
        for (size_t i = 0; i < rows_n; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Q f = M[i][c];
            for (size_t k = c; k <= n; ++k) M[i][k] -= f * M[r][k];
        }
        pivcol.push_back(static_cast<int>(c));
        ++r;
    }
    for (size_t i = r; i < rows_n; ++i)
        if (M[i][n] != 0) return std::nullopt;
    QVec x(n, Q(0));
    for (size_t i = 0; i < r; ++i) x[pivcol[i]] = M[i][n];
    return x;
}

Q round_q(const Q& q) {
    Q h = q + Q(1, 2);
    Z f;
    mpz_fdiv_q(f.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
    return Q(f);
}

// obtuse superbase b1, b2, -b1-b2 of a 2D lattice sitting in Q^3
struct Base2 {
    Vec3 b1, b2;
};

Base2 obtuse_base(const Mat3& G, Vec3 b1, Vec3 b2) {
    for (int guard = 0; guard < 10000; ++guard) {
        if (norm(G, b1) > norm(G, b2)) std::swap(b1, b2);
        Q mu = round_q(dot(G, b1, b2) / norm(G, b1));
        if (mu == 0) break;
        b2 = sub(b2, scale(mu, b1));
    }
    if (dot(G, b1, b2) > 0) b2 = neg(b2);
    return {b1, b2};
}

// coordinates of v (in the plane of the base) w.r.t. b1, b2
std::array<Q, 2> coords2(const Mat3& G, const Base2& B, const Vec3& v) {
    Q g11 = norm(G, B.b1), g12 = dot(G, B.b1, B.b2), g22 = norm(G, B.b2);
    Q r1 = dot(G, B.b1, v), r2 = dot(G, B.b2, v);
    Q dd = g11 * g22 - g12 * g12;
    Q c1 = (g22 * r1 - g12 * r2) / dd, c2 = (g11 * r2 - g12 * r1) / dd;
    c1.canonicalize();
    c2.canonicalize();
    Vec3 back = add(scale(c1, B.b1), scale(c2, B.b2));
    if (back != v) throw DomainError("Unrecognized", "vector not in the base plane");
    return {c1, c2};
}

// conorms of the pairs (b1,w), (b2,w), (b1,b2)
std::array<Q, 3> pair_conorms(const Mat3& G, const Base2& B) {
    Vec3 w = neg(add(B.b1, B.b2));
    return {-dot(G, B.b1, w), -dot(G, B.b2, w), -dot(G, B.b1, B.b2)};
}

}  // namespace

// ---------------------------------------------------------------- affine maps

Affine affine_identity() { return {mat_identity(), {0, 0, 0}}; }
Affine translation(const Vec3& v) { return {mat_identity(), v}; }

Affine compose(const Affine& a, const Affine& b) { return {mul(a.L, b.L), add(a.t, mul(a.L, b.t))}; }

Affine inverse(const Affine& a) {
    Mat3 li = inverse(a.L);
    return {li, neg(mul(li, a.t))};
}

Affine power(const Affine& a, long long n) {
    Affine base = n < 0 ? inverse(a) : a;
    if (n < 0) n = -n;
    Affine r = affine_identity();
    while (n > 0) {
        if (n & 1) r = compose(r, base);
        base = compose(base, base);
        n >>= 1;
    }
    return r;
}

bool is_translation(const Affine& a) { return a.L == mat_identity(); }

int linear_order(const Mat3& L) {
    Mat3 p = L;
    for (int k = 1; k <= 6; ++k) {
        if (p == mat_identity()) return k;
        p = mul(p, L);
    }
    throw DomainError("InvalidGroup", "linear part has infinite or crystallographically impossible order");
}

Mat3 fixed_projector(const Mat3& L) {
    int k = linear_order(L);
    Mat3 s = zero3(), p = mat_identity();
    for (int i = 0; i < k; ++i) {
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) s[r][c] += p[r][c];
        p = mul(p, L);
    }
    for (auto& r : s)
        for (auto& x : r) {
            x /= k;
            x.canonicalize();
        }
    return s;
}

bool is_isometry(const Mat3& gram, const Affine& a) { return mul(transpose(a.L), mul(gram, a.L)) == gram; }

// ---------------------------------------------------------------- presentations

const Presentation& presentation(CosmType t) {
    static const std::vector<Presentation> p = {
        {{"X", "Y", "Z"}, {"X^-1Y^-1XY", "X^-1Z^-1XZ", "Y^-1Z^-1YZ"}, {"X", "Y", "Z"}},
        {{"X", "Y", "Z"}, {"X^-1Y^-1XY", "ZXZ^-1X", "ZYZ^-1Y"}, {"X", "Y", "Z^2"}},
        {{"X", "Y", "Z"}, {"X^-1Y^-1XY", "ZXZ^-1Y^-1", "ZYZ^-1XY"}, {"X", "Y", "Z^3"}},
        {{"X", "Y", "Z"}, {"X^-1Y^-1XY", "ZXZ^-1Y^-1", "ZYZ^-1X"}, {"X", "Y", "Z^4"}},
        {{"X", "Y", "Z"}, {"X^-1Y^-1XY", "ZXZ^-1Y^-1X^-1", "ZYZ^-1X"}, {"X", "Y", "Z^6"}},
        {{"X", "Y", "Z"}, {"X^-1Y^2XY^2", "Y^-1X^2YX^2", "XYZ"}, {"X^2", "Y^2", "(XY)^-2"}},
        {{"W", "X", "Z"}, {"X^-1ZXZ", "W^-1ZWZ", "X^-1W^-1XW"}, {"W^2", "X^2", "WX", "Z"}},
        {{"W", "X", "Z"}, {"X^-1ZXZ", "W^-1ZWZ", "X^-1W^-1XWZ^-1"}, {"W^2", "X^2", "WX", "Z"}},
        {{"W", "X", "Z"}, {"X^-1ZXZ", "W^-1ZWZ", "W^-1XWX"}, {"W^2", "X^2", "Z"}},
        {{"W", "X", "Z"}, {"X^-1ZXZ", "W^-1ZWZ", "W^-1XWZ^-1X"}, {"W^2", "X^2", "Z"}},
    };
    return p[static_cast<int>(t)];
}

namespace {

struct WordParser {
    const std::string& s;
    const std::vector<std::string>& gens;
    size_t i = 0;

    [[noreturn]] void fail(const std::string& m) {
        throw DomainError("ParseError", "word '" + s + "' column " + std::to_string(i + 1) + ": " + m);
    }
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    int exponent() {
        skip();
        if (i >= s.size() || s[i] != '^') return 1;
        ++i;
        bool brace = i < s.size() && s[i] == '{';
        if (brace) ++i;
        int sign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) sign = s[i++] == '-' ? -1 : 1;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected exponent");
        int e = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e = e * 10 + (s[i++] - '0');
        if (brace) {
            if (i >= s.size() || s[i] != '}') fail("expected }");
            ++i;
        }
        return sign * e;
    }
    Word seq(bool inner) {
        Word w;
        for (;;) {
            skip();
            if (i >= s.size()) {
                if (inner) fail("unbalanced (");
                return w;
            }
            char c = s[i];
            if (c == ')') {
                if (!inner) fail("unbalanced )");
                ++i;
                return w;
            }
            Word piece;
            if (c == '(') {
                ++i;
                piece = seq(true);
            } else if (c == '1') {
                ++i;
                continue;
            } else {
                auto it = std::find(gens.begin(), gens.end(), std::string(1, c));
                if (it == gens.end()) fail(std::string("unknown generator '") + c + "'");
                ++i;
                piece = {{static_cast<int>(it - gens.begin()), 1}};
            }
            int e = exponent();
            Word rep;
            if (e < 0) {
                Word invp;
                for (auto it2 = piece.rbegin(); it2 != piece.rend(); ++it2) invp.push_back({it2->first, -it2->second});
                piece = invp;
                e = -e;
            }
            for (int k = 0; k < e; ++k) rep.insert(rep.end(), piece.begin(), piece.end());
            w.insert(w.end(), rep.begin(), rep.end());
        }
    }
};

}  // namespace

Word parse_word(const std::string& s, const std::vector<std::string>& gens) {
    WordParser p{s, gens};
    return p.seq(false);
}

Affine evaluate(const Word& w, const std::vector<Affine>& gens) {
    Affine r = affine_identity();
    for (auto& [g, e] : w) r = compose(r, power(gens.at(g), e));
    return r;
}

int exponent_sum(const Word& w, int gen) {
    int s = 0;
    for (auto& [g, e] : w)
        if (g == gen) s += e;
    return s;
}

SpaceGroup standard_generators(const Descriptor& d) {
    SpaceGroup g;
    g.gram = naming_lattice(d);
    const Mat3 I = mat_identity();
    const Mat3 M = diag(1, 1, -1);
    auto aff = [](const Mat3& L, Vec3 t) { return Affine{L, t}; };
    switch (d.type) {
        case CosmType::c1:
            g.gens = {translation({1, 0, 0}), translation({0, 1, 0}), translation({0, 0, 1})};
            break;
        case CosmType::c2:
        case CosmType::c3:
        case CosmType::c4:
        case CosmType::c6: {
            Mat3 R;
            if (d.type == CosmType::c2) R = diag(-1, -1, 1);
            if (d.type == CosmType::c3) R = rows({{0, -1, 0}, {1, -1, 0}, {0, 0, 1}});
            if (d.type == CosmType::c4) R = rows({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}});
            if (d.type == CosmType::c6) R = rows({{1, -1, 0}, {1, 0, 0}, {0, 0, 1}});
            int s = d.chirality == Chirality::sinistral ? -1 : 1;
            g.gens = {translation({1, 0, 0}), translation({0, 1, 0}), aff(R, {0, 0, s})};
            break;
        }
        case CosmType::c22: {
            Affine X = aff(diag(1, -1, -1), {1, 0, 0});
            Affine Y = aff(diag(-1, 1, -1), {0, 1, 1});
            g.gens = {X, Y, inverse(compose(X, Y))};
            break;
        }
        case CosmType::pa1:
            g.gens = {aff(M, {-1, -1, 0}), aff(M, {1, 0, 0}), translation({0, 0, 1})};
            break;
        case CosmType::ma1:
            g.gens = {aff(M, {-1, -1, -1}), aff(M, {1, 0, 0}), translation({0, 0, 2})};
            break;
        case CosmType::pa2:
            g.gens = {aff(diag(-1, 1, -1), {0, 1, 0}), aff(M, {1, 0, 0}), translation({0, 0, 1})};
            break;
        case CosmType::ma2:
            g.gens = {aff(diag(-1, 1, -1), {0, 1, -1}), aff(M, {1, 0, 0}), translation({0, 0, 2})};
            break;
    }
    (void)I;
    return g;
}

bool verify_relations(const Descriptor& d) {
    auto g = standard_generators(d);
    auto& p = presentation(d.type);
    for (auto& r : p.relators)
        if (!(evaluate(parse_word(r, p.gens), g.gens) == affine_identity())) return false;
    return true;
}

// ---------------------------------------------------------------- structure

int GroupStructure::find(const Mat3& L) const {
    for (size_t i = 0; i < reps.size(); ++i)
        if (reps[i].L == L) return static_cast<int>(i);
    return -1;
}

bool GroupStructure::contains(const Affine& g) const {
    int j = find(g.L);
    return j >= 0 && T.contains(sub(g.t, reps[j].t));
}

GroupStructure structure(const SpaceGroup& g) {
    for (auto& s : g.gens) linear_order(s.L);
    GroupStructure st;
    st.reps.push_back(affine_identity());
    std::vector<Vec3> trans;
    for (size_t i = 0; i < st.reps.size(); ++i) {
        for (auto& s : g.gens) {
            Affine u = compose(s, st.reps[i]);
            int j = st.find(u.L);
            if (j < 0) {
                if (st.reps.size() >= 48) throw DomainError("InvalidGroup", "point group is not finite");
                st.reps.push_back(u);
                continue;
            }
            // Schreier generator r_j^-1 s r_i
            Affine tau = compose(inverse(st.reps[j]), u);
            if (!is_zero(tau.t)) trans.push_back(tau.t);
        }
    }
    st.T = lattice_from(trans);
    return st;
}

bool has_fixed_point(const Affine& g, const Lattice3& T) {
    // fixed point of some (L, t + λ) iff t ∈ T + Im(L - I)
    return contains_mod_subspace(T, columns(msub(g.L, mat_identity())), g.t);
}

bool fixed_point_free(const SpaceGroup& g) {
    auto s = structure(g);
    for (size_t i = 1; i < s.reps.size(); ++i)
        if (has_fixed_point(s.reps[i], s.T)) return false;
    return true;
}

std::vector<std::string> homology(CosmType t) {
    auto& p = presentation(t);
    ZMat m;
    for (auto& r : p.relators) {
        auto w = parse_word(r, p.gens);
        std::vector<Z> row;
        for (size_t g = 0; g < p.gens.size(); ++g) row.push_back(exponent_sum(w, static_cast<int>(g)));
        m.push_back(row);
    }
    auto diag_f = smith_diagonal(m);
    std::vector<std::string> out;
    for (auto& x : diag_f)
        if (abs(x) != 1) out.push_back(Z(abs(x)).get_str());
    for (size_t k = diag_f.size(); k < p.gens.size(); ++k) out.push_back("inf");
    return out;
}

int mod2_rank(CosmType t) {
    int r = 0;
    for (auto& f : homology(t))
        if (f == "inf" || Z(f) % 2 == 0) ++r;
    return r;
}

// ---------------------------------------------------------------- recognition

namespace {

Lattice3 naming_of(const GroupStructure& s) {
    std::vector<Vec3> gens(s.T.b.begin(), s.T.b.end());
    for (auto& r : s.reps) {
        Mat3 P = fixed_projector(r.L);
        gens.push_back(mul(P, r.t));
        for (auto& b : s.T.b) gens.push_back(mul(P, b));
    }
    return lattice_from(gens);
}

}  // namespace

Descriptor recognize(const SpaceGroup& g) {
    if (!positive_definite(g.gram)) throw DomainError("NotPositiveDefinite", "frame Gram matrix");
    for (auto& s : g.gens)
        if (!is_isometry(g.gram, s)) throw DomainError("InvalidGroup", "generator is not an isometry of the frame");
    auto st = structure(g);
    for (size_t i = 1; i < st.reps.size(); ++i)
        if (has_fixed_point(st.reps[i], st.T)) throw DomainError("HasFixedPoint", "the group has a fixed point");
    const Mat3& G = g.gram;
    const int n = static_cast<int>(st.reps.size());
    bool orientable = true;
    for (auto& r : st.reps)
        if (det(r.L) != 1) orientable = false;
    Lattice3 N = naming_of(st);
    Q ratio = covolume_ratio(st.T, N);
    auto len_on = [&](const Vec3& dir) { return norm(G, line_generator(N, dir)); };
    auto unrecognized = [](const std::string& m) { return DomainError("Unrecognized", m); };

    Descriptor d;
    if (orientable) {
        if (n == 1) {
            d = c1_from_diagram(conorms_of_gram(congruent(G, st.T.basis_cols())));
        } else {
            int gen = -1;
            for (int i = 1; i < n; ++i)
                if (linear_order(st.reps[i].L) == n) gen = i;
            if (gen >= 0 && (n == 2 || n == 3 || n == 4 || n == 6)) {
                static const CosmType ct[7] = {CosmType::c1, CosmType::c1, CosmType::c2, CosmType::c3,
                                               CosmType::c4, CosmType::c1, CosmType::c6};
                d.type = ct[n];
                Vec3 a = eigen_line(st.reps[gen].L, 1);
                Vec3 v = line_generator(N, a);
                auto plane = sublattice_kernel(st.T, {mul(G, a)});
                if (plane.size() != 2) throw unrecognized("base lattice");
                auto B = obtuse_base(G, plane[0], plane[1]);
                auto c = pair_conorms(G, B);
                std::sort(c.begin(), c.end(), [](const Q& x, const Q& y) { return x > y; });
                d.params["D"] = norm(G, v);
                if (n == 2) {
                    d.params["A"] = c[0];
                    d.params["B"] = c[1];
                    d.params["C"] = c[2];
                } else if (n == 4) {
                    if (!(c[0] == c[1] && c[2] == 0)) throw unrecognized("c4 base is not square");
                    d.params["A"] = c[0];
                } else {
                    if (!(c[0] == c[1] && c[1] == c[2])) throw unrecognized("base is not hexagonal");
                    d.params["A"] = c[0];
                }
                if (n >= 3) {
                    // the rep whose screw vector is +v (mod n v) fixes the handedness
                    for (int i = 1; i < n; ++i) {
                        auto& r = st.reps[i];
                        if (linear_order(r.L) != n) continue;
                        Vec3 sv = mul(fixed_projector(r.L), r.t);
                        Q m;
                        for (int k = 0; k < 3; ++k)
                            if (v[k] != 0) m = sv[k] / v[k];
                        m.canonicalize();
                        if (!is_integer(m)) throw unrecognized("screw vector off the naming lattice");
                        long long mm = ((to_ll(m) % n) + n) % n;
                        if (mm != 1) continue;
                        Vec3 u = B.b1, ru = mul(r.L, B.b1);
                        Mat3 cols;
                        for (int k = 0; k < 3; ++k) {
                            cols[k][0] = u[k];
                            cols[k][1] = ru[k];
                            cols[k][2] = v[k];
                        }
                        d.chirality = det(cols) > 0 ? Chirality::dextral : Chirality::sinistral;
                        break;
                    }
                    if (d.chirality == Chirality::none) throw unrecognized("could not fix handedness");
                }
            } else if (n == 4) {
                d.type = CosmType::c22;
                std::vector<Q> v;
                for (int i = 1; i < n; ++i) v.push_back(len_on(eigen_line(st.reps[i].L, 1)));
                d.params["A"] = v[0];
                d.params["B"] = v[1];
                d.params["C"] = v[2];
            } else {
                throw unrecognized("orientable point group of order " + std::to_string(n));
            }
        }
    } else if (n == 2) {
        if (ratio == 2)
            d.type = CosmType::pa1;
        else if (ratio == 4)
            d.type = CosmType::ma1;
        else
            throw unrecognized("|N/T| = " + qstr(ratio));
        const Mat3& M = st.reps[1].L;
        Vec3 nrm = eigen_line(M, -1);
        d.params["D"] = len_on(nrm);
        auto plane = sublattice_kernel(N, {mul(G, nrm)});
        if (plane.size() != 2) throw unrecognized("mirror lattice");
        auto B = obtuse_base(G, plane[0], plane[1]);
        Mat3 P = fixed_projector(M);
        int cls = 0;
        for (auto& b : st.T.b) {
            auto c = coords2(G, B, mul(P, b));
            if (!is_integer(c[0]) || !is_integer(c[1])) throw unrecognized("projected translation off the base");
            int k = static_cast<int>(((to_ll(c[0]) % 2 + 2) % 2) + 2 * ((to_ll(c[1]) % 2 + 2) % 2));
            if (k == 0) continue;
            if (cls != 0 && cls != k) throw unrecognized("translation class");
            cls = k;
        }
        if (cls == 0) throw unrecognized("no translation class");
        auto pc = pair_conorms(G, B);  // (b1,w) (b2,w) (b1,b2)
        // class k is the vector complementary to the pair carrying A
        int ai = cls == 2 ? 0 : (cls == 1 ? 1 : 2);
        d.params["A"] = pc[ai];
        std::vector<Q> rest;
        for (int k = 0; k < 3; ++k)
            if (k != ai) rest.push_back(pc[k]);
        d.params["B"] = rest[0];
        d.params["C"] = rest[1];
    } else if (n == 4) {
        if (ratio == 4)
            d.type = CosmType::pa2;
        else if (ratio == 8)
            d.type = CosmType::ma2;
        else
            throw unrecognized("|N/T| = " + qstr(ratio));
        int rot = -1;
        std::vector<int> refl;
        for (int i = 1; i < n; ++i) {
            if (det(st.reps[i].L) == 1)
                rot = i;
            else
                refl.push_back(i);
        }
        if (rot < 0 || refl.size() != 2) throw unrecognized("point group is not *22");
        Vec3 axis = eigen_line(st.reps[rot].L, 1);
        Vec3 fa = mul(G, axis);
        auto phi = [&](const Vec3& v) -> Q { return fa[0] * v[0] + fa[1] * v[1] + fa[2] * v[2]; };
        std::vector<int> xm;
        for (int i : refl) {
            auto& r = st.reps[i];
            Mat3 P = fixed_projector(r.L);
            Q gg = 0;
            for (auto& b : st.T.b) gg = qgcd(gg, phi(mul(P, b)));
            Q x0 = phi(mul(P, r.t));
            bool perp = gg == 0 ? x0 == 0 : is_integer(Q(x0 / gg));
            if (perp) xm.push_back(i);
        }
        if (xm.size() != 1) throw unrecognized("cannot single out the X mirror");
        int other = refl[0] == xm[0] ? refl[1] : refl[0];
        d.params["D"] = len_on(eigen_line(st.reps[xm[0]].L, -1));
        d.params["A"] = len_on(eigen_line(st.reps[other].L, -1));
        d.params["B"] = len_on(axis);
    } else {
        throw unrecognized("non-orientable point group of order " + std::to_string(n));
    }
    for (auto& [k, v] : d.params) v.canonicalize();
    Q vol = det(congruent(G, st.T.basis_cols())) / Q(n * n);
    vol.canonicalize();
    if (vol != volume_sq(d)) throw unrecognized("volume check failed for " + name(d));
    return canonicalize(d);
}

// ---------------------------------------------------------------- double covers

std::vector<SignHom> sign_homomorphisms(CosmType t) {
    auto& p = presentation(t);
    size_t g = p.gens.size();
    std::vector<Word> rel;
    for (auto& r : p.relators) rel.push_back(parse_word(r, p.gens));
    std::vector<SignHom> out;
    for (unsigned mask = 1; mask < (1u << g); ++mask) {
        SignHom h;
        for (size_t i = 0; i < g; ++i) h.signs.push_back((mask >> i) & 1 ? -1 : 1);
        bool ok = true;
        for (auto& w : rel) {
            int odd = 0;
            for (size_t i = 0; i < g; ++i)
                if (h.signs[i] < 0) odd += exponent_sum(w, static_cast<int>(i));
            if (odd % 2 != 0) ok = false;
        }
        if (ok) out.push_back(h);
    }
    return out;
}

SpaceGroup kernel_subgroup(const Descriptor& d, const SignHom& h) {
    auto g = standard_generators(d);
    auto& p = presentation(d.type);
    if (h.signs.size() != g.gens.size()) throw DomainError("NotAHomomorphism", "one sign per generator");
    for (auto& r : p.relators) {
        auto w = parse_word(r, p.gens);
        int odd = 0;
        for (size_t i = 0; i < h.signs.size(); ++i)
            if (h.signs[i] < 0) odd += exponent_sum(w, static_cast<int>(i));
        if (odd % 2) throw DomainError("NotAHomomorphism", "relator " + r + " maps to -1");
    }
    int s = -1;
    for (size_t i = 0; i < h.signs.size(); ++i)
        if (h.signs[i] < 0) {
            s = static_cast<int>(i);
            break;
        }
    if (s < 0) throw DomainError("NotAHomomorphism", "the trivial sign map is not onto");
    // Schreier generators for the transversal {1, s}
    SpaceGroup k;
    k.gram = g.gram;
    Affine S = g.gens[s], Si = inverse(S);
    for (size_t i = 0; i < g.gens.size(); ++i) {
        auto& x = g.gens[i];
        if (h.signs[i] > 0) {
            k.gens.push_back(x);
            k.gens.push_back(compose(Si, compose(x, S)));
        } else {
            Affine a = compose(Si, x);
            if (!(a == affine_identity())) k.gens.push_back(a);
            k.gens.push_back(compose(x, S));
        }
    }
    auto big = structure(g), small = structure(k);
    Q idx = Q(static_cast<long>(big.reps.size()), static_cast<long>(small.reps.size())) * covolume_ratio(small.T, big.T);
    idx.canonicalize();
    if (idx != 2) throw DomainError("Unrecognized", "kernel index is " + qstr(idx));
    return k;
}

namespace {

struct Br {
    Q a, b, c;
};
// [u]:v w
Br bracket(const Q& u, const Q& v, const Q& w) {
    if (v <= w) return {w - v, 2 * v, 2 * v + 4 * u};
    return {v - w, 2 * w, 2 * w + 4 * u};
}

Descriptor c1_lambda(std::array<Q, 6> abcdef) {
    Descriptor d;
    d.type = CosmType::c1;
    const char* nm[6] = {"A", "B", "C", "D", "E", "F"};
    for (int i = 0; i < 6; ++i) d.params[nm[i]] = abcdef[i];
    return canonicalize(d);
}

Chirality flip(Chirality c) {
    return c == Chirality::dextral ? Chirality::sinistral : (c == Chirality::sinistral ? Chirality::dextral : c);
}

}  // namespace

std::string sign_string(CosmType t, const SignHom& h) {
    auto sg = [](int s) { return s > 0 ? "+" : "-"; };
    auto& s = h.signs;
    switch (t) {
        case CosmType::c1:
        case CosmType::c3:
        case CosmType::c4:
        case CosmType::c6:
        case CosmType::c22:
            return std::string("X") + sg(s[0]) + " Y" + sg(s[1]) + " Z" + sg(s[2]);
        case CosmType::c2:
            return std::string("W") + sg(s[0] * s[1]) + " X" + sg(s[0]) + " Y" + sg(s[1]) + " Z" + sg(s[2]);
        default:
            return std::string("X") + sg(s[1]) + " Y" + sg(s[0] * s[1]) + " Z" + sg(s[2]);
    }
}

Descriptor table_cover(const Descriptor& d, const SignHom& h) {
    validate(d);
    auto P = [&](const char* k) { return d.p(k); };
    auto& s = h.signs;
    auto mk = [](CosmType t, std::vector<Q> v, Chirality c = Chirality::none) {
        return canonicalize(make_descriptor(t, v, c));
    };
    auto none = []() -> Descriptor { throw DomainError("NotAHomomorphism", "no table entry"); };
    switch (d.type) {
        case CosmType::c1: {
            // kernel lattice of the sign map on T
            std::vector<Vec3> gens;
            Vec3 e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
            for (int i = 0; i < 3; ++i) {
                gens.push_back(s[i] > 0 ? e[i] : scale(2, e[i]));
                for (int j = i + 1; j < 3; ++j)
                    if (s[i] < 0 && s[j] < 0) gens.push_back(add(e[i], e[j]));
            }
            auto L = lattice_from(gens);
            return c1_from_diagram(conorms_of_gram(congruent(naming_lattice(d), L.basis_cols())));
        }
        case CosmType::c2: {
            int sw = s[0] * s[1], sx = s[0], sy = s[1];
            if (sw > 0 && sx > 0 && sy > 0) return c1_lambda({P("A"), P("B"), P("C"), 4 * P("D"), 0, 0});
            // the conorm of the two negative vectors is bracketed
            Q u, v, w;
            if (sw > 0) u = P("C"), v = P("A"), w = P("B");
            else if (sx > 0) u = P("B"), v = P("A"), w = P("C");
            else u = P("A"), v = P("B"), w = P("C");
            auto b = bracket(u, v, w);
            return mk(CosmType::c2, {P("D"), b.a, b.b, b.c});
        }
        case CosmType::c3:
            return mk(CosmType::c3, {4 * P("D"), P("A")}, flip(d.chirality));
        case CosmType::c6:
            return mk(CosmType::c3, {4 * P("D"), P("A")}, d.chirality);
        case CosmType::c4:
            if (s[0] > 0) return mk(CosmType::c2, {4 * P("D"), P("A"), P("A"), 0});
            return mk(CosmType::c4, {P("D"), 2 * P("A")}, d.chirality);
        case CosmType::c22: {
            if (s[0] > 0) return mk(CosmType::c2, {P("A"), 4 * P("B"), 4 * P("C"), 0});
            if (s[1] > 0) return mk(CosmType::c2, {P("B"), 4 * P("A"), 4 * P("C"), 0});
            return mk(CosmType::c2, {P("C"), 4 * P("A"), 4 * P("B"), 0});
        }
        default:
            break;
    }
    // amphis, in the columns X, Y, Z with Y = XW
    int tx = s[1], ty = s[0] * s[1], tz = s[2];
    Q A = P("A"), D = P("D"), B = P("B");
    switch (d.type) {
        case CosmType::pa1:
        case CosmType::ma1: {
            Q C = P("C");
            bool plus = d.type == CosmType::pa1;
            Q Dc = plus ? D : 4 * D;
            if (tx < 0 && ty > 0 && tz > 0) {
                if (plus) {
                    auto b = bracket(A, B, C);
                    return c1_lambda({b.a, b.b, b.c, D, 0, 0});
                }
                if (B >= C + D) return c1_lambda({2 * C, 2 * C + 4 * A, B - C - D, 2 * D, 2 * D, 0});
                if (C >= B + D) return c1_lambda({2 * B, 2 * B + 4 * A, C - B - D, 2 * D, 2 * D, 0});
                if (D >= B + C) return c1_lambda({2 * C, 2 * C, D - B - C, 2 * B, 2 * B, 4 * A});
                return c1_lambda({C + D - B, B + D - C, B + C - D + 4 * A, C + D - B, B + D - C, B + C - D});
            }
            if (tx > 0 && ty < 0 && tz > 0) {
                auto b = bracket(B, A, C);
                return mk(CosmType::pa1, {Dc, b.a, b.b, b.c});
            }
            if (tx < 0 && ty < 0 && tz > 0) {
                auto b = bracket(C, A, B);
                return mk(CosmType::pa1, {Dc, b.a, b.b, b.c});
            }
            if (!plus) return none();
            if (ty > 0 && tz < 0) return mk(CosmType::pa1, {4 * D, A, B, C});
            if (ty < 0 && tz < 0) return mk(CosmType::ma1, {D, A, B, C});
            return none();
        }
        case CosmType::pa2:
        case CosmType::ma2: {
            bool plus = d.type == CosmType::pa2;
            if (tx < 0 && ty > 0 && tz > 0) {
                if (plus) return mk(CosmType::pa1, {4 * A, B, D, 0});
                auto b = bracket(0, B, D);
                return mk(CosmType::pa1, {4 * A, b.a, b.b, b.c});
            }
            if (tx > 0 && ty < 0 && tz > 0) return mk(CosmType::pa1, {plus ? D : 4 * D, A, 4 * B, 0});
            if (tx < 0 && ty < 0 && tz > 0) return mk(CosmType::c2, {B, 4 * A, plus ? D : 4 * D, 0});
            if (!plus) return none();
            if (ty > 0 && tz < 0) return mk(CosmType::pa2, {4 * D, A, B});
            if (ty < 0 && tz < 0) return mk(CosmType::ma2, {D, A, B});
            return none();
        }
        default:
            return none();
    }
}

std::vector<Cover> double_covers(const Descriptor& d) {
    std::vector<Cover> out;
    for (auto& h : sign_homomorphisms(d.type)) {
        Cover c;
        c.h = h;
        c.table = table_cover(d, h);
        c.recognized = recognize(kernel_subgroup(d, h));
        c.agrees = c.table == c.recognized;
        out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------- automorphisms

std::vector<Affine> evaluate_images(const Descriptor& d, const std::vector<std::string>& images) {
    auto g = standard_generators(d);
    auto& p = presentation(d.type);
    if (images.size() != p.gens.size()) throw DomainError("ParseError", "one image per generator required");
    std::vector<Affine> out;
    for (auto& im : images) out.push_back(evaluate(parse_word(im, p.gens), g.gens));
    return out;
}

bool is_automorphism(const Descriptor& d, const std::vector<std::string>& images) {
    auto g = standard_generators(d);
    auto& p = presentation(d.type);
    auto im = evaluate_images(d, images);
    for (auto& r : p.relators)
        if (!(evaluate(parse_word(r, p.gens), im) == affine_identity())) return false;
    // generation, decided exactly: same point group and same translation subgroup
    auto full = structure(g);
    try {
        auto sub = structure(SpaceGroup{g.gram, im});
        return sub.reps.size() == full.reps.size() && same_lattice(sub.T, full.T);
    } catch (const DomainError&) {
        return false;
    }
}

std::optional<Affine> realize_automorphism(const Descriptor& d, const std::vector<std::string>& images) {
    auto g = standard_generators(d);
    auto& p = presentation(d.type);
    auto im = evaluate_images(d, images);
    std::vector<Vec3> u, v;
    for (auto& tw : p.translations) {
        auto w = parse_word(tw, p.gens);
        Affine a = evaluate(w, g.gens), b = evaluate(w, im);
        if (!is_translation(a) || !is_translation(b)) return std::nullopt;
        u.push_back(a.t);
        v.push_back(b.t);
    }
    // pick three independent translations
    std::vector<int> pick;
    for (size_t j = 0; j < u.size() && pick.size() < 3; ++j) {
        std::vector<Vec3> trial;
        for (int k : pick) trial.push_back(u[k]);
        trial.push_back(u[j]);
        if (span_rank(trial) == static_cast<int>(trial.size())) pick.push_back(static_cast<int>(j));
    }
    if (pick.size() != 3) return std::nullopt;
    Mat3 U, V;
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 3; ++r) {
            U[r][c] = u[pick[c]][r];
            V[r][c] = v[pick[c]][r];
        }
    Mat3 A = mul(V, inverse(U));
    if (det(A) == 0) return std::nullopt;
    for (size_t j = 0; j < u.size(); ++j)
        if (mul(A, u[j]) != v[j]) return std::nullopt;
    Mat3 Ai = inverse(A);
    QMat M;
    QVec rhs;
    for (size_t i = 0; i < g.gens.size(); ++i) {
        if (mul(A, mul(g.gens[i].L, Ai)) != im[i].L) return std::nullopt;
        Mat3 IL = msub(mat_identity(), im[i].L);
        Vec3 r = sub(im[i].t, mul(A, g.gens[i].t));
        for (int k = 0; k < 3; ++k) {
            M.push_back(QVec(IL[k].begin(), IL[k].end()));
            rhs.push_back(r[k]);
        }
    }
    auto sol = solve(M, rhs);
    if (!sol) return std::nullopt;
    return Affine{A, {(*sol)[0], (*sol)[1], (*sol)[2]}};
}

bool normalizes(const Descriptor& d, const Affine& a) {
    auto g = standard_generators(d);
    auto st = structure(g);
    Affine ai = inverse(a);
    for (auto& x : g.gens)
        if (!st.contains(compose(a, compose(x, ai)))) return false;
    for (auto& x : g.gens)
        if (!st.contains(compose(ai, compose(x, a)))) return false;
    return true;
}

bool is_inner(const Descriptor& d, const Affine& a) {
    if (!normalizes(d, a)) throw DomainError("DoesNotNormalize", "map does not normalize the group");
    auto st = structure(standard_generators(d));
    int j = st.find(a.L);
    if (j < 0) return false;
    std::vector<Mat3> Ls;
    for (auto& r : st.reps) Ls.push_back(r.L);
    auto V = fixed_space(Ls);
    return contains_mod_subspace(st.T, V, sub(a.t, st.reps[j].t));
}

const std::vector<std::vector<std::string>>& rigid_automorphisms(CosmType t) {
    static const std::vector<std::vector<std::vector<std::string>>> tab = {
        {{"X^-1", "Y^-1", "Z^-1"}},
        {{"X", "Y", "XZ"}, {"X", "Y", "YZ"}, {"X", "Y", "Z^-1"}},
        {{"X", "Y", "XZ"}, {"X^-1", "Y^-1", "Z"}, {"Y", "X", "Z^-1"}},
        {{"X", "Y", "XZ"}, {"Y", "X", "Z^-1"}},
        {{"Y", "X", "Z^-1"}},
        {{"X", "YX^2", "ZX^2"}, {"XY^2", "Y", "ZY^2"}, {"XZ^2", "YZ^2", "Z"}, {"YZ^-1", "ZX^-1", "XY^-1"}},
        {{"WZ", "XZ", "Z^-1"}},
        {{"WZ", "XZ", "Z^-1"}},
        {{"WZ", "XZ", "Z"}, {"W^-1", "X", "Z"}, {"W", "X^-1", "Z"}},
        {{"WZ", "XZ", "Z"}, {"W^-1", "X", "Z"}, {"W", "X^-1", "Z"}},
    };
    return tab[static_cast<int>(t)];
}

bool c22_outer_relations_check(std::vector<std::string>* log) {
    auto d = make_descriptor(CosmType::c22, {1, 1, 1});
    bool ok = true;
    auto note = [&](bool cond, const std::string& what) {
        if (log) log->push_back(std::string(cond ? "ok   " : "FAIL ") + what);
        ok = ok && cond;
    };
    auto real = [&](const std::vector<std::string>& im) {
        if (!is_automorphism(d, im)) throw DomainError("Unrecognized", "not an automorphism");
        auto a = realize_automorphism(d, im);
        if (!a) throw DomainError("Unrecognized", "not realizable");
        return *a;
    };
    auto inner = [&](const Affine& a) { return is_inner(d, a); };
    auto eqmod = [&](const Affine& a, const Affine& b) { return inner(compose(a, inverse(b))); };
    std::vector<Affine> th = {real({"X", "YX^2", "ZX^2"}), real({"XY^2", "Y", "ZY^2"}), real({"XZ^2", "YZ^2", "Z"})};
    Affine phi = real({"YZ^-1", "ZX^-1", "XY^-1"});
    std::vector<Affine> gens = {th[0], th[1], th[2], phi};
    const char* nm[4] = {"theta1", "theta2", "theta3", "phi"};
    for (int i = 0; i < 4; ++i) {
        note(!inner(gens[i]), std::string(nm[i]) + " is outer");
        note(inner(compose(gens[i], gens[i])), std::string(nm[i]) + "^2 is inner");
        for (int j = i + 1; j < 4; ++j)
            note(eqmod(compose(gens[i], gens[j]), compose(gens[j], gens[i])),
                 std::string(nm[i]) + " and " + nm[j] + " commute mod inner");
    }
    // the 2^4 is faithful modulo inner automorphisms
    bool faithful = true;
    for (int mask = 1; mask < 16; ++mask) {
        Affine a = affine_identity();
        for (int i = 0; i < 4; ++i)
            if (mask >> i & 1) a = compose(a, gens[i]);
        if (inner(a)) faithful = false;
    }
    note(faithful, "no nontrivial product of theta1..3, phi is inner");
    Affine t123phi = compose(th[0], compose(th[1], compose(th[2], phi)));
    // S3: even permutations of X,Y,Z, odd permutations of their inverses
    std::vector<std::array<int, 3>> perms = {{1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
    const char* L[3] = {"X", "Y", "Z"};
    for (auto& s : perms) {
        int inv = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (s[i] > s[j]) ++inv;
        bool even = inv % 2 == 0;
        std::vector<std::string> im;
        for (int i = 0; i < 3; ++i) im.push_back(std::string(L[s[i]]) + (even ? "" : "^-1"));
        std::string pn = "(" + im[0] + "," + im[1] + "," + im[2] + ")";
        Affine pi = real(im);
        Affine pii = inverse(pi);
        for (int i = 0; i < 3; ++i) {
            Affine c = compose(pi, compose(th[i], pii));
            note(eqmod(c, th[s[i]]), "pi" + pn + " sends theta" + std::to_string(i + 1) + " to theta" +
                                         std::to_string(s[i] + 1));
        }
        Affine c = compose(pi, compose(phi, pii));
        note(eqmod(c, even ? phi : t123phi),
             "pi" + pn + " sends phi to " + (even ? "phi" : "theta1 theta2 theta3 phi"));
    }
    return ok;
}

// ---------------------------------------------------------------- appendix properties

bool helicosm_splits(const Descriptor& d) {
    auto g = standard_generators(d);
    auto st = structure(g);
    int n = static_cast<int>(st.reps.size());
    int gen = -1;
    for (int i = 1; i < n; ++i)
        if (linear_order(st.reps[i].L) == n) gen = i;
    if (gen < 0) throw DomainError("InvalidParameters", "not a helicosm");
    Vec3 a = eigen_line(st.reps[gen].L, 1);
    Lattice3 N = naming_of(st);
    Vec3 v = line_generator(N, a);
    auto plane = sublattice_kernel(st.T, {mul(g.gram, a)});
    std::vector<Vec3> gens = plane;
    gens.push_back(scale(n, v));
    if (span_rank(gens) != 3) return false;
    return same_lattice(lattice_from(gens), st.T);
}

std::vector<int> rotation_orders_2d(const std::array<std::array<Q, 2>, 2>& g) {
    std::vector<int> out;
    for (auto& m : lattice2_automorphisms(g)) {
        if (m[0][0] * m[1][1] - m[0][1] * m[1][0] != 1) continue;
        auto p = m;
        int k = 1;
        auto isI = [](const std::array<std::array<long long, 2>, 2>& x) {
            return x[0][0] == 1 && x[1][1] == 1 && x[0][1] == 0 && x[1][0] == 0;
        };
        while (!isI(p) && k < 100) {
            std::array<std::array<long long, 2>, 2> q{};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) q[i][j] = p[i][0] * m[0][j] + p[i][1] * m[1][j];
            p = q;
            ++k;
        }
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace platy
