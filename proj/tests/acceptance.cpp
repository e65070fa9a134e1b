// one PASS/FAIL line per acceptance criterion; exits 0 unless a failure is not on the known list
#include "platy/bravo.hpp"
#include "platy/groups.hpp"
#include "platy/metrics.hpp"
#include "platy/tables.hpp"
#include "platy/voronoi.hpp"
#include "random_cosm.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace platy;
using testing_support::rand_q;
using testing_support::random_descriptor;

namespace {

// criteria that cannot pass as stated: a FAIL is known when every failure message contains the marker
struct Known {
    std::string marker, reason;
};
const std::map<int, Known> kKnown = {
    {9, {"orbit-lattice bound below a certified distance",
         "for c22^{3 2 1} two grid points are at quotient distance^2 239/100 > 7/3 = the orbit-lattice bound, so "
         "the diameter exceeds the bound there; the bound itself (diameter >= bound) holds everywhere"}},
    {10, {"-a1 (WZ,XZ,Z^-1)",
          "the tabulated -a1 image (WZ,XZ,Z^-1) violates X^-1 W^-1 X W = Z; (WZ,XZ,Z) is an automorphism"}},
};

struct Check {
    bool ok = true;
    std::vector<std::string> fails;  // distinct messages, in order
    void operator()(bool c, const std::string& what) {
        if (c) return;
        ok = false;
        if (std::find(fails.begin(), fails.end(), what) == fails.end()) fails.push_back(what);
    }
};

Conorms3 diag7(std::array<int, 7> v) {
    Conorms3 d;
    for (int i = 0; i < 7; ++i) d.v[i] = v[i];
    return d;
}

std::vector<Q> sorted(const std::array<Q, 7>& a) {
    std::vector<Q> s(a.begin(), a.end());
    std::sort(s.begin(), s.end());
    return s;
}

Mat3 random_gram(std::mt19937& rng, int r) {
    std::uniform_int_distribution<int> u(-r, r);
    for (;;) {
        Mat3 g;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) g[i][j] = g[j][i] = u(rng);
        if (positive_definite(g)) return g;
    }
}

Conorms3 random_reduced(std::mt19937& rng, int hi) {
    std::uniform_int_distribution<int> u(0, hi);
    for (;;) {
        Conorms3 d;
        for (int i = 0; i < 6; ++i) d.v[i] = u(rng);
        d.v[PQ] = 0;
        if (determinant(d) != 0) return d;
    }
}

std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- criteria

Check c1_reduce2() {
    Check ck;
    std::vector<Conorms2> tr;
    auto r = reduce2(Conorms2{{-3, 5, 10}}, &tr);
    ck(tr.size() == 3, "chain length");
    ck(tr.size() == 3 && tr[1] == Conorms2{{3, -1, 4}}, "middle step (3,-1,4)");
    ck(r == Conorms2{{1, 1, 2}}, "result (1,1,2)");
    ck(determinant2(r) == determinant2(Conorms2{{-3, 5, 10}}), "determinant kept");
    return ck;
}

Check c2_reduce3() {
    Check ck;
    Mat3 g = {{{2, 1, 1}, {1, 3, 1}, {1, 1, 4}}};
    auto r = conorms_of_gram(g);
    ck(sorted(r.v) == std::vector<Q>{0, 0, 0, 1, 1, 2, 3}, "conorm multiset");
    std::vector<int> zeros;
    for (int p = 0; p < 7; ++p)
        if (r.v[p] == 0) zeros.push_back(p);
    ck(zeros.size() == 3 && collinear(zeros[0], zeros[1], zeros[2]), "zeros collinear");
    ck(sorted(vonorms(r).v) == std::vector<Q>{2, 3, 3, 4, 4, 5, 7}, "vonorms");
    ck(sorted(vonorms(r).v) == sorted(coset_minima(g)), "vonorms = coset minima");
    ck(determinant(r) == 17, "determinant from triangles");
    ck(det(g) == 17, "determinant by cofactors");
    return ck;
}

Check c3_reduce_property() {
    Check ck;
    std::mt19937 rng(101);
    for (int i = 0; i < 1000; ++i) {
        Mat3 g = random_gram(rng, 12);
        ReduceTrace tr;
        auto r = reduce3(putative_conorms(superbase_from_gram(g)), &tr);
        ck(!tr.steps.empty() && tr.steps.back() == r, "trace ends at the result");
        ck(is_reduced(r), "non-negative");
        ck(std::count(r.v.begin(), r.v.end(), Q(0)) >= 1, "has a zero");
        ck(determinant(r) == det(g), "determinant preserved");
        ck(sorted(vonorms(r).v) == sorted(coset_minima(g)), "vonorm oracle");
        ck(conorms_from_vonorms(vonorms(r)) == r, "vonorm round trip");
    }
    return ck;
}

Check c4_formulas() {
    Check ck;
    std::mt19937 rng(202);
    for (int i = 0; i < 100; ++i) {
        auto d = random_reduced(rng, 6);
        ck(covering_radius_sq(d) == covering_radius_oracle(d), "covering radius = Voronoi circumradius");
        ck(covering_radius_sq(d) == voronoi_cell(gram_of(d)).circumradius_sq, "cell vertices");
        auto du = dual_conorms(d);
        ck(lattices_isometric(dual_conorms(du), d), "dual is an involution");
        ck(determinant(du) * determinant(d) == 1, "determinant inverts");
        for (int p = 0; p < 7; ++p)
            if (d.v[p] == 0) ck(edge_length_sq(d, p) == 0, "edge length vanishes on zero conorms");
    }
    return ck;
}

Check c5_classification() {
    Check ck;
    std::mt19937 rng(303);
    const std::map<VoronoiType, std::pair<int, int>> sig = {{VoronoiType::tO, {14, 24}}, {VoronoiType::hD, {12, 18}},
                                                           {VoronoiType::rD, {12, 14}}, {VoronoiType::hP, {8, 12}},
                                                           {VoronoiType::rC, {6, 8}}};
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 500; ++i) {
        auto d = random_reduced(rng, coin(rng) ? 2 : 7);
        // a special diagram also fits the looser templates; exactly one fit must be most symmetric
        auto t = satisfied_templates(d);
        ck(!t.empty(), "some template fits");
        int top = 0, at_top = 0;
        for (char c : t) top = std::max(top, bravo_info(c).symmetry_factor);
        for (char c : t) at_top += bravo_info(c).symmetry_factor == top;
        ck(at_top == 1, "a unique most symmetric template");
        auto b = bravo_class(d);
        ck(std::count(t.begin(), t.end(), b.letter) == 1 && b.symmetry_factor == top, "class = that template");
        auto cell = voronoi_cell(gram_of(d));
        auto s = sig.at(voronoi_type(d));
        ck(cell.faces == s.first && static_cast<int>(cell.vertices.size()) == s.second, "polytope signature");
        ck(static_cast<int>(lattice_automorphisms(gram_of(d)).size()) == 2 * b.symmetry_factor, "symmetry factor");
    }
    std::set<VoronoiType> vt;
    std::set<std::string> bn;
    for (char c : all_letters()) {
        vt.insert(bravo_info(c).voronoi);
        bn.insert(bravais_class(c).name);
        ck(bravais_class(c).symmetry_factor == bravo_info(c).symmetry_factor, "factor per letter");
    }
    ck(all_letters().size() == 24, "24 classes");
    ck(vt.size() == 5, "5 Voronoi types");
    ck(bn.size() == 14 && all_bravais_classes().size() == 14, "14 Bravais classes");
    auto cube = bravo_class(diag7({1, 1, 1, 0, 0, 0, 0}));
    ck(cube.letter == 'X' && bravais_class('X').name == "primitive Cubic", "unit cubic");
    auto bcc = bravo_class(diag7({1, 1, 1, 1, 1, 1, 0}));
    ck(bcc.letter == 'H' && bravais_class('H').name.find("body-centered Cubic") == 0, "bcc");
    return ck;
}

Check c6_groups() {
    Check ck;
    std::mt19937 rng(404);
    const std::map<CosmType, std::vector<std::string>> h1 = {
        {CosmType::c1, {"inf", "inf", "inf"}}, {CosmType::c2, {"2", "2", "inf"}}, {CosmType::c3, {"3", "inf"}},
        {CosmType::c4, {"2", "inf"}},          {CosmType::c6, {"inf"}},           {CosmType::c22, {"4", "4"}},
        {CosmType::pa1, {"2", "inf", "inf"}},  {CosmType::ma1, {"inf", "inf"}},   {CosmType::pa2, {"2", "2", "inf"}},
        {CosmType::ma2, {"4", "inf"}}};
    for (auto t : all_cosm_types()) {
        ck(homology(t) == h1.at(t), "H1 of " + tag(t));
        for (int i = 0; i < 50; ++i) {
            auto d = random_descriptor(t, rng);
            ck(verify_relations(d), "relators " + name(d));
            ck(fixed_point_free(standard_generators(d)), "free action " + name(d));
        }
    }
    SpaceGroup rot;
    rot.gram = mat_identity();
    rot.gens = {{to_q(IMat3{{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}}), {0, 0, 0}}, translation({1, 0, 0}),
                translation({0, 1, 0}), translation({0, 0, 1})};
    ck(!fixed_point_free(rot), "rotation group flagged");
    bool threw = false;
    try {
        recognize(rot);
    } catch (const DomainError& e) {
        threw = e.code == "HasFixedPoint";
    }
    ck(threw, "recognize rejects the rotation group");
    return ck;
}

Check c7_covers() {
    Check ck;
    const int expect[10] = {7, 7, 1, 3, 1, 3, 7, 3, 7, 3};
    std::mt19937 rng(505);
    for (auto t : all_cosm_types()) {
        ck(static_cast<int>(sign_homomorphisms(t).size()) == expect[static_cast<int>(t)], "count for " + tag(t));
        for (int i = 0; i < 20; ++i) {
            auto d = random_descriptor(t, rng);
            for (auto& c : double_covers(d)) {
                ck(c.agrees, "table form for " + name(d) + " " + sign_string(t, c.h));
                ck(volume_sq(c.recognized) == 4 * volume_sq(d), "volume quadruples");
            }
        }
    }
    return ck;
}

Check c8_recognize() {
    Check ck;
    std::mt19937 rng(606);
    for (auto t : all_cosm_types())
        for (int i = 0; i < 50; ++i) {
            auto d = random_descriptor(t, rng);
            ck(recognize(standard_generators(d)) == d, "round trip " + name(d) + " " + to_string(d.chirality));
        }
    return ck;
}

Check c9_metrics() {
    Check ck;
    std::mt19937 rng(707);
    for (auto t : all_cosm_types())
        for (int i = 0; i < 200; ++i) {
            auto d = random_descriptor(t, rng);
            ck(systole_sq(d) == systole_oracle(d), "systole " + name(d));
        }
    std::vector<std::vector<Q>> wit = {{10, 1, 1, 3}, {10, 1, 3, 1}, {1, 5, 1, 1}, {Q(1, 4), 5, 5, 5}, {2, 5, Q(1, 8), Q(1, 8)}};
    std::vector<std::string> names = {"A+B", "A+C", "B+C+D", "4D", "4(B+C)"};
    for (size_t i = 0; i < wit.size(); ++i) {
        std::string w;
        auto d = make_descriptor(CosmType::ma1, wit[i]);
        Q s = systole_sq(d, &w);
        int ties = 0;
        for (auto& term : systole_terms(d)) ties += term.value == s;
        ck(w == names[i] && ties == 1 && systole_oracle(d) == s, "-a1 witness " + names[i]);
    }
    for (int i = 0; i < 500; ++i) {
        auto x = didicosm_terms(rand_q(rng), rand_q(rng), rand_q(rng));
        ck(x.delta <= x.alpha && x.delta <= x.beta && x.delta <= x.gamma, "delta dominated");
    }
    std::vector<Descriptor> ds = {canonicalize(make_descriptor(CosmType::c22, {3, 2, 1}))};
    for (auto t : all_cosm_types())
        for (int i = 0; i < 3; ++i) ds.push_back(random_descriptor(t, rng, 3, 1));
    for (auto& d : ds) {
            auto f = diameter_form(d);
            auto iv = diameter_oracle(d);
            Q sys = systole_sq(d);
            double width = std::sqrt(iv.upper.get_d()) - std::sqrt(iv.lower.get_d());
            ck(width <= 2 * std::sqrt(sys.get_d() / 64) + 1e-5, "oracle interval width " + name(d));
            if (f.exact)
                ck(iv.lower <= f.value && f.value <= iv.upper, "exact diameter in interval " + name(d));
            else {
                ck(f.value <= iv.upper, "bound exceeds the oracle upper endpoint " + name(d));
                ck(iv.lower <= f.value, "orbit-lattice bound below a certified distance: " + name(d));
            }
        }
    return ck;
}

Check c10_automorphisms() {
    Check ck;
    for (auto t : all_cosm_types()) {
        // generic parameters: all distinct
        std::vector<Q> v;
        for (size_t i = 0; i < type_info(t).params.size(); ++i) v.push_back(Q(static_cast<long>(2 * i + 3), 1 + i % 2));
        if (t == CosmType::c1) v = {5, 3, 2, Q(3, 2), 1, Q(1, 2)};
        auto d = canonicalize(make_descriptor(t, v));
        for (auto& im : rigid_automorphisms(t)) {
            std::string w = tag(t) + " (" + im[0] + "," + im[1] + "," + im[2] + ")";
            if (!is_automorphism(d, im)) {
                ck(false, w + " is not an automorphism");
                continue;
            }
            auto a = realize_automorphism(d, im);
            ck(a && is_isometry(naming_lattice(d), *a), w + " is not an isometry");
        }
    }
    ck(c22_outer_relations_check(), "c22 outer automorphism relations");
    // conjugating by a naming-lattice translation is inner iff all coordinates are even
    auto d = make_descriptor(CosmType::c22, {1, 1, 1});
    auto g = standard_generators(d);
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) {
                Affine t = translation({a, b, c});
                bool even = a % 2 == 0 && b % 2 == 0 && c % 2 == 0;
                ck(is_inner(d, t) == even, "parity rule");
                auto p = [](const std::string& s, int k) { return s + "^" + std::to_string(k) + " "; };
                std::vector<std::string> im = {"X " + p("Y", 2 * b) + p("Z", 2 * c), "Y " + p("X", 2 * a) + p("Z", 2 * c),
                                               "Z " + p("X", 2 * a) + p("Y", 2 * b)};
                auto want = evaluate_images(d, im);
                for (int i = 0; i < 3; ++i)
                    ck(compose(inverse(t), compose(g.gens[i], t)) == want[i], "translation gives the stated images");
            }
    return ck;
}

Check c11_appendix() {
    Check ck;
    std::mt19937 rng(909);
    for (auto t : {CosmType::c2, CosmType::c3, CosmType::c4, CosmType::c6})
        for (int i = 0; i < 50; ++i) {
            auto d = random_descriptor(t, rng);
            ck(helicosm_splits(d), "splitting " + name(d));
        }
    std::uniform_int_distribution<int> u(-6, 6);
    std::set<int> seen;
    for (int i = 0; i < 500;) {
        std::array<std::array<Q, 2>, 2> g;
        // every fifth draw from the two special shapes
        int a = std::abs(u(rng)) + 1;
        if (i % 10 == 0)
            g = {{{Q(a), Q(0)}, {Q(0), Q(a)}}};
        else if (i % 10 == 5)
            g = {{{Q(2 * a), Q(-a)}, {Q(-a), Q(2 * a)}}};
        else
            g = {{{Q(a), Q(u(rng))}, {Q(0), Q(std::abs(u(rng)) + 1)}}};
        g[1][0] = g[0][1];
        if (g[0][0] * g[1][1] - g[0][1] * g[0][1] <= 0) continue;
        ++i;
        for (int o : rotation_orders_2d(g)) {
            seen.insert(o);
            ck(o == 1 || o == 2 || o == 3 || o == 4 || o == 6, "rotation order");
        }
    }
    ck(seen.count(3) && seen.count(4) && seen.count(6), "orders 3, 4, 6 all occur");
    return ck;
}

Check c12_tables() {
    Check ck;
    for (int n : table_numbers())
        ck(render_table(n) == slurp(std::string(GOLDEN_DIR) + "/table" + std::to_string(n) + ".txt"),
           "table " + std::to_string(n));
    return ck;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Check()>>> crit = {
        {"2D reduction chain", c1_reduce2},
        {"3D reduction example", c2_reduce3},
        {"reduction properties on 1000 Gram matrices", c3_reduce_property},
        {"lattice formulas on 100 reduced lattices", c4_formulas},
        {"BraVo / Bravais / Voronoi classification", c5_classification},
        {"group relators, freeness, homology", c6_groups},
        {"double covers", c7_covers},
        {"recognition round trip", c8_recognize},
        {"systole, orbit-lattice and diameter checks", c9_metrics},
        {"automorphisms", c10_automorphisms},
        {"splitting lemma and crystallographic restriction", c11_appendix},
        {"catalog tables", c12_tables},
    };
    int unexpected = 0;
    for (size_t i = 0; i < crit.size(); ++i) {
        int n = static_cast<int>(i) + 1;
        auto t0 = std::chrono::steady_clock::now();
        Check r;
        try {
            r = crit[i].second();
        } catch (const std::exception& e) {
            r(false, std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        line << (r.ok ? "PASS" : "FAIL") << " " << n << " " << crit[i].first;
        line.precision(2);
        line << std::fixed << " (" << s << "s)";
        if (!r.ok) {
            line << ": " << r.fails[0];
            if (r.fails.size() > 1) line << " (+" << r.fails.size() - 1 << " more)";
            auto k = kKnown.find(n);
            bool known = k != kKnown.end();
            for (auto& f : r.fails) known = known && f.find(k->second.marker) != std::string::npos;
            if (known)
                line << " [known: " << k->second.reason << "]";
            else
                ++unexpected;
        }
        std::cout << line.str() << std::endl;
    }
    return unexpected ? 1 : 0;
}
