#include "platy/conorms.hpp"

#include <algorithm>

namespace platy {

const std::array<int, 7> kCharacter = {1, 2, 4, 3, 5, 6, 7};

static std::array<std::array<int, 3>, 7> make_lines() {
    std::array<std::array<int, 3>, 7> out{};
    int n = 0;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c)
                if ((kCharacter[a] ^ kCharacter[b] ^ kCharacter[c]) == 0) out[n++] = {a, b, c};
    return out;
}
const std::array<std::array<int, 3>, 7> kLines = make_lines();

const char* pos_name(int p) {
    static const char* names[] = {"p01", "p02", "p03", "p12", "p13", "p23", "q"};
    return names[p];
}

bool collinear(int a, int b, int c) { return (kCharacter[a] ^ kCharacter[b] ^ kCharacter[c]) == 0; }

static int pos_of_char(int ch) {
    for (int i = 0; i < 7; ++i)
        if (kCharacter[i] == ch) return i;
    return -1;
}

int third_point(int a, int b) { return pos_of_char(kCharacter[a] ^ kCharacter[b]); }

std::array<int, 3> line_of_coset(int c) {
    std::array<int, 3> l{};
    int n = 0;
    for (int p = 0; p < 7; ++p)
        if (__builtin_popcount(kCharacter[p] & c) % 2 == 0) l[n++] = p;
    return l;
}

int coset_of_line(const std::array<int, 3>& line) {
    for (int c = 1; c <= 7; ++c) {
        auto l = line_of_coset(c);
        if (std::is_permutation(l.begin(), l.end(), line.begin())) return c;
    }
    return -1;
}

const std::vector<Perm7>& collineations() {
    static const std::vector<Perm7> all = [] {
        std::vector<Perm7> out;
        // images of the basis characters 1,2,4 determine the map; they must be independent
        for (int a = 1; a < 8; ++a)
            for (int b = 1; b < 8; ++b)
                for (int c = 1; c < 8; ++c) {
                    if (a == b || (a ^ b) == c || c == a || c == b) continue;
                    Perm7 p{};
                    for (int i = 0; i < 7; ++i) {
                        int ch = kCharacter[i], img = 0;
                        if (ch & 1) img ^= a;
                        if (ch & 2) img ^= b;
                        if (ch & 4) img ^= c;
                        p[i] = pos_of_char(img);
                    }
                    out.push_back(p);
                }
        return out;
    }();
    return all;
}

Conorms3 permute(const Perm7& p, const Conorms3& d) {
    Conorms3 r;
    for (int i = 0; i < 7; ++i) r.v[p[i]] = d.v[i];
    return r;
}

const std::vector<std::array<int, 3>>& triangles() {
    static const std::vector<std::array<int, 3>> t = [] {
        std::vector<std::array<int, 3>> out;
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b)
                for (int c = b + 1; c < 7; ++c)
                    if (!collinear(a, b, c)) out.push_back({a, b, c});
        return out;
    }();
    return t;
}

Superbase3 superbase_from_gram(const Mat3& g) {
    if (!positive_definite(g)) throw DomainError("NotPositiveDefinite", "Gram matrix is not positive definite");
    Superbase3 s;
    // index 0 is v0 = -(v1+v2+v3); 1..3 are the basis
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s[i + 1][j + 1] = g[i][j];
    for (int i = 1; i < 4; ++i) {
        Q r = -(s[i][1] + s[i][2] + s[i][3]);
        s[i][0] = r;
        s[0][i] = r;
    }
    s[0][0] = -(s[0][1] + s[0][2] + s[0][3]);
    return s;
}

Conorms3 putative_conorms(const Superbase3& s) {
    Conorms3 d;
    d.v[P01] = -s[0][1];
    d.v[P02] = -s[0][2];
    d.v[P03] = -s[0][3];
    d.v[P12] = -s[1][2];
    d.v[P13] = -s[1][3];
    d.v[P23] = -s[2][3];
    d.v[PQ] = 0;
    return d;
}

bool is_reduced(const Conorms3& d) {
    bool zero = false;
    for (auto& x : d.v) {
        if (x < 0) return false;
        if (x == 0) zero = true;
    }
    return zero;
}

static Q sum(const Conorms3& d) {
    Q s = 0;
    for (auto& x : d.v) s += x;
    return s;
}

Conorms3 reduce3(const Conorms3& in, ReduceTrace* trace) {
    Conorms3 d = in;
    if (trace) trace->steps = {d};
    const int cap = 100000;
    for (int it = 0; it < cap; ++it) {
        int neg = -1;
        for (int i = 0; i < 7; ++i)
            if (d.v[i] < 0 && (neg < 0 || d.v[i] < d.v[neg])) neg = i;
        if (neg < 0) {
            // all non-negative; a valid lattice always has a zero here
            bool zero = false;
            for (auto& x : d.v) zero = zero || x == 0;
            if (!zero) throw DomainError("NonTermination", "non-negative diagram without a zero: not a lattice diagram");
            return d;
        }
        const std::array<int, 3>* work = nullptr;
        for (auto& l : kLines) {
            if (l[0] != neg && l[1] != neg && l[2] != neg) continue;
            if (d.v[l[0]] == 0 || d.v[l[1]] == 0 || d.v[l[2]] == 0) {
                work = &l;
                break;
            }
        }
        if (!work) throw DomainError("NonTermination", "no working line through a negative conorm");
        Q eps = -d.v[neg];
        Q before = sum(d);
        for (int i = 0; i < 7; ++i) {
            bool on = i == (*work)[0] || i == (*work)[1] || i == (*work)[2];
            d.v[i] += on ? eps : Q(-eps);
        }
        // termination measure: the conorm sum (a quarter of the vonorm sum) drops by eps
        if (!(sum(d) < before)) throw DomainError("NonTermination", "termination measure did not decrease");
        if (trace) trace->steps.push_back(d);
    }
    throw DomainError("NonTermination", "iteration cap reached");
}

Conorms2 reduce2(const Conorms2& in, std::vector<Conorms2>* trace) {
    Conorms2 d = in;
    if (trace) *trace = {d};
    for (int it = 0; it < 100000; ++it) {
        int neg = -1;
        for (int i = 0; i < 3; ++i)
            if (d.v[i] < 0 && (neg < 0 || d.v[i] < d.v[neg])) neg = i;
        if (neg < 0) return d;
        Q eps = -d.v[neg];
        for (int i = 0; i < 3; ++i) d.v[i] += (i == neg) ? Q(2 * eps) : Q(-2 * eps);
        if (trace) trace->push_back(d);
    }
    throw DomainError("NonTermination", "iteration cap reached");
}

Conorms2 conorms2_from_gram(const std::array<std::array<Q, 2>, 2>& g) {
    // basis x, y with w = -x-y: A = -x.w, B = -y.w, C = -x.y
    return Conorms2{{g[0][0] + g[0][1], g[1][1] + g[0][1], -g[0][1]}};
}

std::array<std::array<Q, 2>, 2> gram2_from_conorms(const Conorms2& d) {
    const Q &A = d.v[0], &B = d.v[1], &C = d.v[2];
    return {{{A + C, -C}, {-C, B + C}}};
}

Q determinant2(const Conorms2& d) { return d.v[0] * d.v[1] + d.v[1] * d.v[2] + d.v[2] * d.v[0]; }

Vonorms3 vonorms(const Conorms3& d) {
    Vonorms3 r;
    for (int c = 1; c <= 7; ++c) {
        auto l = line_of_coset(c);
        Q s = 0;
        for (int p = 0; p < 7; ++p)
            if (p != l[0] && p != l[1] && p != l[2]) s += d.v[p];
        r.v[c - 1] = s;
    }
    return r;
}

Conorms3 conorms_from_vonorms(const Vonorms3& v) {
    Q S = 0;
    for (auto& x : v.v) S += x;
    S /= 4;
    Conorms3 d;
    for (int p = 0; p < 7; ++p) {
        Q through = 0;
        for (int c = 1; c <= 7; ++c) {
            auto l = line_of_coset(c);
            if (l[0] == p || l[1] == p || l[2] == p) through += v.v[c - 1];
        }
        d.v[p] = S - through / 2;
    }
    if (!(vonorms(d) == v)) throw DomainError("InconsistentVonorms", "vonorm inversion does not round-trip");
    return d;
}

Q determinant(const Conorms3& d) {
    Q s = 0;
    for (auto& t : triangles()) s += d.v[t[0]] * d.v[t[1]] * d.v[t[2]];
    return s;
}

Q second_determinant(const Conorms3& d) {
    Q s = 0;
    for (auto& t : triangles()) {
        Q p = 1;
        for (int i = 0; i < 7; ++i)
            if (i != t[0] && i != t[1] && i != t[2]) p *= d.v[i];
        s += p;
    }
    return s;
}

Q minimal_vonorm(const Conorms3& d) {
    auto v = vonorms(d);
    return *std::min_element(v.v.begin(), v.v.end());
}

static const Perm7* zero_to_q(const Conorms3& d) {
    for (auto& p : collineations()) {
        Conorms3 r = permute(p, d);
        if (r.v[PQ] == 0) return &p;
    }
    return nullptr;
}

Mat3 gram_of(const Conorms3& in) {
    Conorms3 d = in;
    if (d.v[PQ] != 0) {
        auto p = zero_to_q(d);
        if (!p) throw DomainError("Degenerate", "diagram has no zero conorm");
        d = permute(*p, d);
    }
    // p_ij = -v_i.v_j with indices 0..3
    auto pc = [&](int i, int j) -> Q {
        if (i > j) std::swap(i, j);
        static const int idx[4][4] = {{-1, P01, P02, P03}, {P01, -1, P12, P13}, {P02, P12, -1, P23}, {P03, P13, P23, -1}};
        return d.v[idx[i][j]];
    };
    Mat3 g;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) {
                Q s = 0;
                for (int k = 0; k < 4; ++k)
                    if (k != i) s += pc(i, k);
                g[i - 1][j - 1] = s;
            } else
                g[i - 1][j - 1] = -pc(i, j);
        }
    return g;
}

// labels for G = q, transported to any zero by a collineation
static Placement placement_at(const Conorms3& d, int g) {
    // A=p01 B=p02 C=p12 D=p23 E=p13 F=p03 relative to G=q
    static const std::array<int, 6> base = {P01, P02, P12, P23, P13, P03};
    for (auto& p : collineations()) {
        if (p[PQ] != g) continue;
        Placement pl;
        pl.G = g;
        for (int i = 0; i < 6; ++i) {
            pl.pos[i] = p[base[i]];
            pl.val[i] = d.v[pl.pos[i]];
        }
        return pl;
    }
    throw DomainError("AmbiguousPlacement", "no collineation found");
}

std::vector<Placement> all_placements(const Conorms3& d) {
    std::vector<Placement> out;
    for (int i = 0; i < 7; ++i)
        if (d.v[i] == 0) out.push_back(placement_at(d, i));
    return out;
}

Placement canonical_g_placement(const Conorms3& d) {
    auto all = all_placements(d);
    if (all.empty()) throw DomainError("NotReduced", "canonical placement needs a zero conorm");
    return all.front();
}

static Q covering_from(const Placement& pl, const Conorms3& d) {
    const Q &A = pl.val[0], &B = pl.val[1], &C = pl.val[2], &D = pl.val[3], &E = pl.val[4], &F = pl.val[5];
    Q delta = determinant(d);
    if (delta == 0) throw DomainError("ZeroDeterminant", "degenerate lattice");
    Q dp = second_determinant(d);
    Q m = qmin(qmin(B * E * C * F, C * F * A * D), A * D * B * E);
    Q four = A + B + C + D + E + F - (dp + 4 * m) / delta;
    return four / 4;
}

Q covering_radius_sq(const Conorms3& d) {
    if (!is_reduced(d)) throw DomainError("NotReduced", "covering radius needs a reduced diagram");
    auto all = all_placements(d);
    Q r = covering_from(all.front(), d);
    for (auto& pl : all)
        if (covering_from(pl, d) != r) throw DomainError("AmbiguousPlacement", "covering radius depends on the zero chosen");
    return r;
}

Q edge_length_sq(const Conorms3& d, int position) {
    Q delta = determinant(d);
    if (delta == 0) throw DomainError("ZeroDeterminant", "degenerate lattice");
    Q deriv = 0;
    for (auto& t : triangles()) {
        if (t[0] != position && t[1] != position && t[2] != position) continue;
        Q p = 1;
        for (int i : t)
            if (i != position) p *= d.v[i];
        deriv += p;
    }
    const Q& x = d.v[position];
    // one factor of delta: matches the Voronoi-cell edges and scales linearly
    return x * x * deriv / delta;
}

Conorms3 dual_conorms(const Conorms3& d) {
    if (!is_reduced(d)) throw DomainError("NotReduced", "dual conorms need a reduced diagram");
    auto pl = canonical_g_placement(d);
    const Q &A = pl.val[0], &B = pl.val[1], &C = pl.val[2], &D = pl.val[3], &E = pl.val[4], &F = pl.val[5];
    Q delta = determinant(d);
    if (delta == 0) throw DomainError("ZeroDeterminant", "degenerate lattice");
    Q m = qmin(qmin(A * D, B * E), C * F);
    Conorms3 r;
    r.v[pl.pos[0]] = (A * D - m) / delta;
    r.v[pl.pos[1]] = (B * E - m) / delta;
    r.v[pl.pos[2]] = (C * F - m) / delta;
    r.v[pl.pos[3]] = (A * E + A * F + E * F + m) / delta;
    r.v[pl.pos[4]] = (B * D + B * F + D * F + m) / delta;
    r.v[pl.pos[5]] = (C * D + C * E + D * E + m) / delta;
    r.v[pl.G] = (A * B + A * C + B * C + m) / delta;
    return r;
}

Conorms3 canonical(const Conorms3& d) {
    bool have = false;
    Conorms3 best;
    for (auto& p : collineations()) {
        Conorms3 r = permute(p, d);
        if (r.v[PQ] != 0) continue;
        if (!have || std::lexicographical_compare(r.v.begin(), r.v.end(), best.v.begin(), best.v.end())) {
            best = r;
            have = true;
        }
    }
    if (!have) throw DomainError("NotReduced", "canonical form needs a zero conorm");
    return best;
}

bool lattices_isometric(const Conorms3& a, const Conorms3& b) { return canonical(a) == canonical(b); }

Conorms3 scaled(const Conorms3& d, const Q& s) {
    Conorms3 r = d;
    for (auto& x : r.v) x *= s;
    return r;
}

Conorms3 conorms_of_gram(const Mat3& g) { return reduce3(putative_conorms(superbase_from_gram(g))); }

}  // namespace platy
