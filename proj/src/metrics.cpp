#include "platy/metrics.hpp"

#include "platy/enumerate.hpp"
#include "platy/voronoi.hpp"

#include <algorithm>
#include <numeric>

namespace platy {

namespace {

Q sq(const Q& x) { return x * x; }
Q ql(long long x) { return Q(static_cast<long>(x)); }

Term min_term(const std::vector<Term>& ts) {
    Term best = ts.at(0);
    for (auto& t : ts)
        if (t.value < best.value) best = t;
    return best;
}
Term max_term(const std::vector<Term>& ts) {
    Term best = ts.at(0);
    for (auto& t : ts)
        if (t.value > best.value) best = t;
    return best;
}
Q qmin_all(std::initializer_list<Q> xs) {
    Q m = *xs.begin();
    for (auto& x : xs) m = qmin(m, x);
    return m;
}

// conorm pair formula shared by c2 and +a1
Q base_covering_sq(const Q& A, const Q& B, const Q& C) {
    return (B + C) * (C + A) * (A + B) / (4 * (B * C + C * A + A * B));
}

long long lcm_den(long long acc, const Q& x) { return std::lcm(acc, x.get_den().get_si()); }

// s ≥ √x, a few decimals
Q sqrt_up(const Q& x) {
    const Z scale = 1000000;
    Q y = x * scale * scale;
    Z c;
    mpz_cdiv_q(c.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
    Z r;
    mpz_sqrt(r.get_mpz_t(), c.get_mpz_t());
    if (r * r < c) r += 1;
    Q out(r, scale);
    out.canonicalize();
    return out;
}

}  // namespace

// ---------------------------------------------------------------- systole

std::vector<Term> systole_terms(const Descriptor& d) {
    validate(d);
    auto P = [&](const char* k) { return d.p(k); };
    switch (d.type) {
        case CosmType::c1:
            return {{"minimal vonorm", minimal_vonorm(c1_diagram(d))}};
        case CosmType::c2:
            return {{"B+C", P("B") + P("C")}, {"C+A", P("C") + P("A")}, {"A+B", P("A") + P("B")}, {"D", P("D")}};
        case CosmType::c3:
        case CosmType::c6:
            return {{"2A", 2 * P("A")}, {"D", P("D")}};
        case CosmType::c4:
            return {{"A", P("A")}, {"D", P("D")}};
        case CosmType::c22:
            return {{"A", P("A")}, {"B", P("B")}, {"C", P("C")}};
        case CosmType::pa1:
            return {{"A+B", P("A") + P("B")}, {"B+C", P("B") + P("C")}, {"A+C", P("A") + P("C")}, {"D", P("D")}};
        case CosmType::ma1:
            return {{"A+B", P("A") + P("B")},
                    {"A+C", P("A") + P("C")},
                    {"B+C+D", P("B") + P("C") + P("D")},
                    {"4D", 4 * P("D")},
                    {"4(B+C)", 4 * (P("B") + P("C"))}};
        case CosmType::pa2:
            return {{"A", P("A")}, {"B", P("B")}, {"D", P("D")}};
        case CosmType::ma2:
            return {{"A", P("A")}, {"B", P("B")}, {"4D", 4 * P("D")}};
    }
    return {};
}

Q systole_sq(const Descriptor& d, std::string* witness) {
    auto t = min_term(systole_terms(d));
    if (witness) *witness = t.name;
    return t.value;
}

Q systole_oracle(const Descriptor& d) {
    auto g = standard_generators(d);
    auto st = structure(g);
    const Mat3& G = g.gram;
    // identity coset: shortest nonzero translation
    Mat3 Tg = congruent(G, st.T.basis_cols());
    Q bound = qmin(Tg[0][0], qmin(Tg[1][1], Tg[2][2]));
    Q best = bound;
    for (auto& x : short_vectors(qmat(Tg), bound)) {
        Vec3 v{Q(static_cast<long>(x[0])), Q(static_cast<long>(x[1])), Q(static_cast<long>(x[2]))};
        best = qmin(best, norm(Tg, v));
    }
    // other cosets: |P(t_r) + P(λ)|² minimized over the projected lattice
    for (size_t i = 1; i < st.reps.size(); ++i) {
        auto& r = st.reps[i];
        Mat3 Pr = fixed_projector(r.L);
        std::vector<Vec3> proj;
        for (auto& b : st.T.b) proj.push_back(mul(Pr, b));
        auto basis = span_basis(proj);
        Vec3 c = mul(Pr, r.t);
        int k = static_cast<int>(basis.size());
        if (k == 0) throw DomainError("HasFixedPoint", "element with trivial fixed space");
        QMat Gs(k, QVec(k));
        QVec rhs(k);
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) Gs[a][b] = dot(G, basis[a], basis[b]);
            rhs[a] = -dot(G, basis[a], c);
        }
        // coordinates of -c in the basis (c lies in its span)
        QVec coord(k);
        if (k == 1) {
            coord[0] = rhs[0] / Gs[0][0];
        } else if (k == 2) {
            Q dd = Gs[0][0] * Gs[1][1] - Gs[0][1] * Gs[1][0];
            coord[0] = (Gs[1][1] * rhs[0] - Gs[0][1] * rhs[1]) / dd;
            coord[1] = (Gs[0][0] * rhs[1] - Gs[1][0] * rhs[0]) / dd;
        } else {
            throw DomainError("Unrecognized", "projected lattice of full rank");
        }
        for (auto& x : coord) x.canonicalize();
        Vec3 back{0, 0, 0};
        for (int a = 0; a < k; ++a) back = add(back, scale(coord[a], basis[a]));
        if (back != neg(c)) throw DomainError("Unrecognized", "screw or glide vector off its fixed space");
        best = qmin(best, closest_vector(Gs, coord).dist_sq);
    }
    return best;
}

// ---------------------------------------------------------------- orbit lattice expressions

DidiTerms didicosm_terms(const Q& A, const Q& B, const Q& C) {
    DidiTerms t;
    t.alpha = A + sq(B + C) / qmax(B, C);
    t.beta = B + sq(C + A) / qmax(C, A);
    t.gamma = C + sq(A + B) / qmax(A, B);
    Q m = qmin_all({A, B, C});
    t.delta = A + B + C + m * m * qmax(1 / A + 1 / B + 1 / C - 2 / m, 0);
    for (Q* x : {&t.alpha, &t.beta, &t.gamma, &t.delta}) x->canonicalize();
    return t;
}

SecondAmphiTerms second_amphi_terms(const Q& A, const Q& B, const Q& C, const Q& D) {
    Q W = B * C + C * A + A * B;
    SecondAmphiTerms t;
    t.I = A + B + 4 * D + (A + B) * sq(D - C) / W;
    t.II = A + B + 4 * C + (A + B + 4 * C) * sq(D - C) / W;
    t.III = 2 * B + 2 * C + D + sq(B + C) / D + (B + C) * sq(B - A) / W;
    t.IV = 2 * A + 2 * C + D + sq(A + C) / D + (A + C) * sq(B - A) / W;
    t.V = A + B + 2 * C + C * C / D;
    for (Q* x : {&t.I, &t.II, &t.III, &t.IV, &t.V}) x->canonicalize();
    return t;
}

Q second_amphi_max_of_mins(const Q& A, const Q& B, const Q& C, const Q& D) {
    auto t = second_amphi_terms(A, B, C, D);
    return qmax(qmin_all({t.I, t.II, t.III, t.IV}), qmin(t.I, t.V));
}

Q second_amphi_min_of_four(const Q& A, const Q& B, const Q& C, const Q& D) {
    auto t = second_amphi_terms(A, B, C, D);
    return qmin_all({t.I, qmax(t.II, t.V), qmax(t.III, t.V), qmax(t.IV, t.V)});
}

std::optional<Q> second_amphi_piecewise(const Q& A, const Q& B, const Q& C, const Q& D) {
    auto t = second_amphi_terms(A, B, C, D);
    if (C >= D) return t.I;
    if (C <= D && D <= A + C && D <= B + C) return qmax(t.II, t.V);
    if (B + C <= D && B <= A) return qmax(t.III, t.V);
    if (B + C <= D && B >= A) return qmax(t.IV, t.V);
    return std::nullopt;
}

// ---------------------------------------------------------------- diameter closed forms

DiameterForm diameter_form(const Descriptor& d) {
    validate(d);
    auto P = [&](const char* k) { return d.p(k); };
    DiameterForm f;
    f.exact = true;
    switch (d.type) {
        case CosmType::c1:
            f.value = covering_radius_sq(c1_diagram(d));
            f.witness = "covering radius";
            break;
        case CosmType::c2:
        case CosmType::pa1:
            f.value = base_covering_sq(P("A"), P("B"), P("C")) + P("D") / 4;
            f.witness = "(B+C)(C+A)(A+B)/4(BC+CA+AB)+D/4";
            break;
        case CosmType::c3:
        case CosmType::c6:
            f.value = Q(2, 3) * P("A") + P("D") / 4;
            f.witness = "2A/3+D/4";
            break;
        case CosmType::c4:
            f.value = P("A") / 2 + P("D") / 4;
            f.witness = "A/2+D/4";
            break;
        case CosmType::pa2:
            f.value = (P("A") + P("B") + P("D")) / 4;
            f.witness = "(A+B+D)/4";
            break;
        case CosmType::c22: {
            auto t = didicosm_terms(P("A"), P("B"), P("C"));
            auto m = max_term({{"alpha", t.alpha}, {"beta", t.beta}, {"gamma", t.gamma}});
            f.exact = false;
            f.value = m.value / 4;
            f.witness = m.name;
            break;
        }
        case CosmType::ma2: {
            // the expressions come in the letters (D, A, B): beta = A + (B+D)^2/max(B,D),
            // gamma = B + (D+A)^2/max(D,A), which are the orbit lattices actually found
            auto t = didicosm_terms(P("D"), P("A"), P("B"));
            auto m = max_term({{"beta", t.beta}, {"gamma", t.gamma}});
            f.exact = false;
            f.value = m.value / 4;
            f.witness = m.name;
            break;
        }
        case CosmType::ma1: {
            Q A = P("A"), B = P("B"), C = P("C"), D = P("D");
            auto m = max_term({{"first orbit lattice", second_amphi_max_of_mins(A, B, C, D)},
                               {"second orbit lattice", second_amphi_max_of_mins(A, C, B, D)}});
            f.exact = false;
            f.value = m.value / 4;
            f.witness = m.name;
            break;
        }
    }
    f.value.canonicalize();
    return f;
}

Q diameter_sq(const Descriptor& d) { return diameter_form(d).value; }

MetricReport metric_report(const Descriptor& d) {
    MetricReport r;
    r.systole_sq = systole_sq(d, &r.witness);
    r.injectivity_radius_sq = r.systole_sq / 4;
    r.injectivity_radius_sq.canonicalize();
    auto f = diameter_form(d);
    r.diameter_sq = f.value;
    r.diameter_kind = f.exact ? "exact" : "orbit_lattice_bound";
    r.diameter_witness = f.witness;
    return r;
}

// ---------------------------------------------------------------- oracles

Q covering_radius_oracle(const Conorms3& d) {
    if (determinant(d) == 0) throw DomainError("ZeroDeterminant", "degenerate lattice");
    return voronoi_cell(gram_of(d)).circumradius_sq;
}

namespace {

// smallest e with e N ⊆ T
long long exponent_of(const Lattice3& T) {
    long long e = 1;
    Vec3 unit[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (auto& u : unit)
        for (auto& c : T.coords(u)) e = lcm_den(e, c);
    return e;
}

}  // namespace

std::vector<OrbitLattice> orbit_lattices(const Descriptor& d, int den) {
    auto g = standard_generators(d);
    auto st = structure(g);
    long long e = exponent_of(st.T);
    long long span = den * e;
    std::vector<OrbitLattice> out;
    std::vector<Conorms3> seen;
    for (long long i = 0; i < span; ++i)
        for (long long j = 0; j < span; ++j)
            for (long long k = 0; k < span; ++k) {
                Vec3 p{Q(static_cast<long>(i), den), Q(static_cast<long>(j), den), Q(static_cast<long>(k), den)};
                for (auto& x : p) x.canonicalize();
                std::vector<Vec3> gens(st.T.b.begin(), st.T.b.end());
                for (size_t r = 1; r < st.reps.size(); ++r) {
                    auto& rep = st.reps[r];
                    gens.push_back(sub(add(mul(rep.L, p), rep.t), p));
                }
                Lattice3 L = lattice_from(gens);
                if (covolume_ratio(st.T, L) != static_cast<long>(st.reps.size())) continue;
                Mat3 gram = congruent(g.gram, L.basis_cols());
                Conorms3 c = canonical(conorms_of_gram(gram));
                if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
                seen.push_back(c);
                out.push_back({p, gram, voronoi_cell(gram).circumradius_sq});
            }
    return out;
}

namespace {

using I3 = std::array<long long, 3>;

// obtuse superbase of T, basis columns in N coordinates
Mat3 selling_basis(const Mat3& G, const Lattice3& T) {
    std::array<Vec3, 4> v;
    for (int i = 0; i < 3; ++i) v[i + 1] = T.b[i];
    v[0] = neg(add(v[1], add(v[2], v[3])));
    for (int guard = 0; guard < 100000; ++guard) {
        bool changed = false;
        for (int i = 0; i < 4 && !changed; ++i)
            for (int j = 0; j < 4 && !changed; ++j) {
                if (i == j || dot(G, v[i], v[j]) <= 0) continue;
                for (int k = 0; k < 4; ++k)
                    if (k != i && k != j) v[k] = add(v[k], v[i]);
                v[i] = neg(v[i]);
                changed = true;
            }
        if (!changed) break;
    }
    Mat3 B;
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 3; ++r) B[r][c] = v[c + 1][r];
    return B;
}

}  // namespace

DiameterInterval diameter_oracle(const Descriptor& d, const OracleConfig& cfg) {
    auto g = standard_generators(d);
    auto st = structure(g);
    const Mat3& G = g.gram;
    Mat3 B = selling_basis(G, st.T);
    Mat3 Bi = inverse(B);
    Mat3 Gt = congruent(G, B);

    // k: denominators of N and of the coset translations in T coordinates
    long long k = 1;
    for (auto& row : Bi)
        for (auto& x : row) k = lcm_den(k, x);
    for (auto& r : st.reps)
        for (auto& x : mul(Bi, r.t)) k = lcm_den(k, x);

    Q covN = covering_radius_sq(conorms_of_gram(G));
    Q sys = systole_sq(d);
    long long n = cfg.grid;
    if (n <= 0) {
        n = 1;
        while (covN / ql(n * n) > sys / 64) ++n;
    }
    const long long m = n * k;
    if (m > 160) throw DomainError("BoundNotCertified", "diameter grid too fine (" + std::to_string(m) + " per edge)");

    // integer Gram in T coordinates
    long long s = 1;
    for (auto& row : Gt)
        for (auto& x : row) s = lcm_den(s, x);
    std::array<std::array<long long, 3>, 3> Gi;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) Gi[a][b] = Q(Gt[a][b] * ql(s)).get_num().get_si();
    auto qf = [&](const I3& x) {
        long long r = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) r += x[a] * Gi[a][b] * x[b];
        return r;
    };

    // the 14 Voronoi-relevant vectors of an obtuse superbase, scaled by m
    std::vector<I3> rel;
    I3 e[4] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
    for (int i = 0; i < 4; ++i) {
        rel.push_back({m * e[i][0], m * e[i][1], m * e[i][2]});
        rel.push_back({-m * e[i][0], -m * e[i][1], -m * e[i][2]});
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            I3 v{m * (e[i][0] + e[j][0]), m * (e[i][1] + e[j][1]), m * (e[i][2] + e[j][2])};
            rel.push_back(v);
            rel.push_back({-v[0], -v[1], -v[2]});
        }

    // squared distance (times s m²) from every point of (1/m)T to T
    const long long m3 = m * m * m;
    auto idx = [&](long long a, long long b, long long c) { return (a * m + b) * m + c; };
    std::vector<long long> table(m3);
    for (long long a = 0; a < m; ++a)
        for (long long b = 0; b < m; ++b)
            for (long long c = 0; c < m; ++c) {
                I3 x{a, b, c};
                long long cur = qf(x);
                for (bool improved = true; improved;) {
                    improved = false;
                    for (auto& v : rel) {
                        I3 y{x[0] - v[0], x[1] - v[1], x[2] - v[2]};
                        long long ny = qf(y);
                        if (ny < cur) {
                            x = y;
                            cur = ny;
                            improved = true;
                        }
                    }
                }
                table[idx(a, b, c)] = cur;
            }

    // group action on (1/m)T / T
    struct Act {
        std::array<std::array<long long, 3>, 3> A;
        I3 c;
    };
    std::vector<Act> acts;
    for (auto& r : st.reps) {
        Act a;
        Mat3 Lt = mul(Bi, mul(r.L, B));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a.A[i][j] = to_ll(Lt[i][j]);
        Vec3 ct = mul(Bi, r.t);
        for (int i = 0; i < 3; ++i) a.c[i] = to_ll(ct[i] * ql(m));
        acts.push_back(a);
    }
    auto md = [&](long long x) { return ((x % m) + m) % m; };
    auto apply = [&](const Act& a, const I3& x) {
        I3 y;
        for (int i = 0; i < 3; ++i) y[i] = md(a.A[i][0] * x[0] + a.A[i][1] * x[1] + a.A[i][2] * x[2] + a.c[i]);
        return y;
    };

    // grid points of (1/n)N, one per orbit
    std::vector<I3> pts;
    for (long long a = 0; a < m; ++a)
        for (long long b = 0; b < m; ++b)
            for (long long c = 0; c < m; ++c) {
                // N coordinates times n: B X / k must be integral
                bool on = true;
                for (int i = 0; i < 3 && on; ++i) {
                    Q y = (B[i][0] * ql(a) + B[i][1] * ql(b) + B[i][2] * ql(c)) / ql(k);
                    on = is_integer(y);
                }
                if (!on) continue;
                I3 x{a, b, c};
                long long self = idx(a, b, c);
                bool rep = true;
                for (auto& act : acts) {
                    auto y = apply(act, x);
                    if (idx(y[0], y[1], y[2]) < self) rep = false;
                }
                if (rep) pts.push_back(x);
            }

    long long best = 0;
    I3 bp{0, 0, 0}, bq{0, 0, 0};
    for (auto& p : pts)
        for (auto& q : pts) {
            long long dmin = -1;
            for (auto& act : acts) {
                auto y = apply(act, q);
                long long v = table[idx(md(p[0] - y[0]), md(p[1] - y[1]), md(p[2] - y[2]))];
                if (dmin < 0 || v < dmin) dmin = v;
            }
            if (dmin > best) {
                best = dmin;
                bp = p;
                bq = q;
            }
        }

    DiameterInterval out;
    out.grid = static_cast<int>(n);
    const Q inv_m = Q(1) / ql(m);
    auto to_n = [&](const I3& x) { return scale(inv_m, mul(B, Vec3{ql(x[0]), ql(x[1]), ql(x[2])})); };
    out.p = to_n(bp);
    out.q = to_n(bq);
    out.lower = ql(best) / ql(s * m * m);
    out.lower.canonicalize();
    // any two points lie within the grid covering radius of grid points
    Q rho = sqrt_up(covN / ql(n * n));
    Q up = sqrt_up(out.lower) + 2 * rho;
    out.upper = up * up;
    out.upper.canonicalize();
    return out;
}

}  // namespace platy
