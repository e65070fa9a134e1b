#include "doctest.h"
#include "platy/enumerate.hpp"
#include "platy/metrics.hpp"
#include "random_cosm.hpp"

using namespace platy;
using testing_support::random_descriptor;

TEST_CASE("closed-form examples") {
    CHECK(systole_sq(make_descriptor(CosmType::c4, {5, 1})) == 1);
    std::string w;
    CHECK(systole_sq(make_descriptor(CosmType::ma1, {10, 1, 1, 1}), &w) == 2);
    CHECK(w == "A+B");
    CHECK(diameter_sq(make_descriptor(CosmType::c2, {1, 0, 1, 1})) == Q(3, 4));
    CHECK(diameter_sq(make_descriptor(CosmType::pa2, {1, 1, 1})) == Q(3, 4));
    auto r = metric_report(make_descriptor(CosmType::c22, {1, 1, 1}));
    CHECK(r.diameter_sq == Q(5, 4));
    CHECK(r.diameter_kind == "orbit_lattice_bound");
    CHECK(r.injectivity_radius_sq == Q(1, 4));
    CHECK(systole_oracle(make_descriptor(CosmType::c22, {1, 1, 1})) == 1);
}

TEST_CASE("systole equals the displacement oracle") {
    std::mt19937 rng(3);
    for (auto t : all_cosm_types())
        for (int i = 0; i < 30; ++i) {
            auto d = random_descriptor(t, rng);
            CAPTURE(name(d));
            CHECK(systole_sq(d) == systole_oracle(d));
        }
}

TEST_CASE("second amphicosm: every first-line term can win") {
    std::vector<std::vector<Q>> witnesses = {{10, 1, 1, 3}, {10, 1, 3, 1}, {1, 5, 1, 1}, {Q(1, 4), 5, 5, 5}, {2, 5, Q(1, 8), Q(1, 8)}};
    std::vector<std::string> expect = {"A+B", "A+C", "B+C+D", "4D", "4(B+C)"};
    for (size_t i = 0; i < 5; ++i) {
        auto d = make_descriptor(CosmType::ma1, witnesses[i]);
        std::string w;
        Q s = systole_sq(d, &w);
        CAPTURE(name(d));
        CHECK(w == expect[i]);
        int ties = 0;
        for (auto& t : systole_terms(d)) ties += t.value == s;
        CHECK(ties == 1);
        CHECK(systole_oracle(d) == s);
    }
}

TEST_CASE("didicosm: delta is dominated") {
    std::mt19937 rng(9);
    for (int i = 0; i < 300; ++i) {
        auto A = testing_support::rand_q(rng), B = testing_support::rand_q(rng), C = testing_support::rand_q(rng);
        auto t = didicosm_terms(A, B, C);
        CHECK(t.delta <= t.alpha);
        CHECK(t.delta <= t.beta);
        CHECK(t.delta <= t.gamma);
    }
}

TEST_CASE("second amphicosm: the three forms of the first orbit lattice") {
    std::mt19937 rng(17);
    int covered = 0;
    for (int i = 0; i < 300; ++i) {
        Q A = testing_support::rand_q(rng), B = testing_support::rand_q(rng), C = testing_support::rand_q(rng),
          D = testing_support::rand_q(rng);
        CHECK(second_amphi_max_of_mins(A, B, C, D) == second_amphi_min_of_four(A, B, C, D));
        auto pw = second_amphi_piecewise(A, B, C, D);
        if (pw) {
            ++covered;
            CHECK(*pw == second_amphi_max_of_mins(A, B, C, D));
        }
    }
    CHECK(covered > 100);
}

TEST_CASE("orbit lattices reproduce the bounds") {
    std::mt19937 rng(23);
    for (auto t : {CosmType::c22, CosmType::ma2, CosmType::ma1})
        for (int i = 0; i < 6; ++i) {
            auto d = random_descriptor(t, rng, 6, 2);
            Q best = 0;
            for (auto& ol : orbit_lattices(d)) best = qmax(best, ol.covering_radius_sq);
            CAPTURE(name(d));
            CHECK(best == diameter_sq(d));
        }
}

TEST_CASE("diameter oracle") {
    auto cube = make_descriptor(CosmType::c1, {1, 1, 0, 0, 0, 1});
    auto iv = diameter_oracle(cube, {12});
    CHECK(iv.lower <= Q(3, 4));
    CHECK(Q(3, 4) <= iv.upper);
    std::mt19937 rng(31);
    for (auto t : all_cosm_types()) {
        auto d = random_descriptor(t, rng, 3, 1);
        auto f = diameter_form(d);
        auto o = diameter_oracle(d);
        CAPTURE(name(d));
        if (f.exact) CHECK(o.lower <= f.value);
        CHECK(f.value <= o.upper);
    }
}

namespace {

// quotient distance² straight from the group: nearest point of the orbit of q, by exact closest-vector search
Q orbit_distance(const Descriptor& d, const Vec3& p, const Vec3& q) {
    auto g = standard_generators(d);
    auto st = structure(g);
    QMat GT = qmat(congruent(g.gram, st.T.basis_cols()));
    Q best = -1;
    for (auto& r : st.reps) {
        Vec3 c = st.T.coords(sub(p, add(mul(r.L, q), r.t)));
        Q v = closest_vector(GT, QVec(c.begin(), c.end())).dist_sq;
        if (best < 0 || v < best) best = v;
    }
    return best;
}

}  // namespace

TEST_CASE("the orbit-lattice bound can be strict") {
    // two grid points farther apart than the largest orbit lattice's covering radius
    for (auto [t, v] : std::vector<std::pair<CosmType, std::vector<Q>>>{{CosmType::c22, {3, 2, 1}}, {CosmType::ma2, {3, 1, 1}}}) {
        auto d = canonicalize(make_descriptor(t, v));
        auto o = diameter_oracle(d);
        CAPTURE(name(d));
        CHECK(orbit_distance(d, o.p, o.q) == o.lower);
        CHECK(o.lower > diameter_sq(d));
        CHECK(diameter_sq(d) <= o.upper);
    }
    auto d = canonicalize(make_descriptor(CosmType::c22, {3, 2, 1}));
    CHECK(diameter_oracle(d).lower == Q(239, 100));
    CHECK(diameter_sq(d) == Q(7, 3));
}

TEST_CASE("covering radius oracle agrees with the formula") {
    Conorms3 c;
    for (auto& x : c.v) x = 0;
    c.v[P01] = c.v[P02] = c.v[P03] = 1;
    CHECK(covering_radius_oracle(c) == Q(3, 4));
    CHECK(covering_radius_oracle(c) == covering_radius_sq(c));
}
