#include "doctest.h"
#include "platy/groups.hpp"

#include <random>

using namespace platy;

namespace {

// a generic-ish descriptor per type, all parameters distinct where allowed
Descriptor sample(CosmType t, int seed = 0) {
    std::vector<Q> v;
    switch (t) {
        case CosmType::c1: v = {3 + seed, 2, 5, 1, 0, 0}; break;
        case CosmType::c2: v = {7, 3 + seed, 2, 1}; break;
        case CosmType::c3: case CosmType::c4: case CosmType::c6: v = {5, 2 + seed}; break;
        case CosmType::c22: v = {2, 3 + seed, 5}; break;
        case CosmType::pa1: case CosmType::ma1: v = {3, 2 + seed, 5, 1}; break;
        case CosmType::pa2: case CosmType::ma2: v = {3, 2 + seed, 7}; break;
    }
    return canonicalize(make_descriptor(t, v));
}

}  // namespace

TEST_CASE("relators hold and groups act freely") {
    for (auto t : all_cosm_types()) {
        auto d = sample(t);
        CAPTURE(name(d));
        CHECK(verify_relations(d));
        auto g = standard_generators(d);
        CHECK(fixed_point_free(g));
        auto s = structure(g);
        CHECK(static_cast<int>(s.reps.size()) == type_info(t).point_group_order);
    }
}

TEST_CASE("homology") {
    CHECK(homology(CosmType::c1) == std::vector<std::string>{"inf", "inf", "inf"});
    CHECK(homology(CosmType::c2) == std::vector<std::string>{"2", "2", "inf"});
    CHECK(homology(CosmType::c3) == std::vector<std::string>{"3", "inf"});
    CHECK(homology(CosmType::c4) == std::vector<std::string>{"2", "inf"});
    CHECK(homology(CosmType::c6) == std::vector<std::string>{"inf"});
    CHECK(homology(CosmType::c22) == std::vector<std::string>{"4", "4"});
    CHECK(homology(CosmType::pa1) == std::vector<std::string>{"2", "inf", "inf"});
    CHECK(homology(CosmType::ma1) == std::vector<std::string>{"inf", "inf"});
    CHECK(homology(CosmType::pa2) == std::vector<std::string>{"2", "2", "inf"});
    CHECK(homology(CosmType::ma2) == std::vector<std::string>{"4", "inf"});
}

TEST_CASE("word parser") {
    std::vector<std::string> g = {"X", "Y", "Z"};
    CHECK(parse_word("X^-1Y^{-2}(XY)^2", g).size() == 7);
    CHECK_THROWS_AS(parse_word("XQ", g), DomainError);
    CHECK_THROWS_AS(parse_word("(XY", g), DomainError);
}

TEST_CASE("recognize round trip") {
    for (auto t : all_cosm_types())
        for (int seed = 0; seed < 3; ++seed) {
            auto d = sample(t, seed);
            CAPTURE(name(d));
            CHECK(recognize(standard_generators(d)) == d);
            if (type_info(t).metachiral) {
                auto e = d;
                e.chirality = Chirality::sinistral;
                CHECK(recognize(standard_generators(e)) == e);
            }
        }
}

TEST_CASE("recognize in a foreign frame") {
    // conjugate by a unimodular change of basis; the platycosm must not change
    IMat3 U = {{{1, 1, 0}, {0, 1, 2}, {1, 0, -1}}};
    Mat3 Uq = to_q(U), Ui = inverse(Uq);
    for (auto t : all_cosm_types()) {
        auto d = sample(t, 1);
        auto g = standard_generators(d);
        SpaceGroup h;
        h.gram = congruent(g.gram, Uq);
        for (auto& a : g.gens) h.gens.push_back({mul(Ui, mul(a.L, Uq)), mul(Ui, a.t)});
        CAPTURE(name(d));
        CHECK(recognize(h) == d);
    }
}

TEST_CASE("space group 33 is the second amphidicosm") {
    SpaceGroup g;
    g.gram = mat_identity();
    g.gens = {{to_q(IMat3{{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}), {0, Q(1, 2), Q(1, 2)}},
              {to_q(IMat3{{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}}), {Q(1, 2), 0, 0}},
              translation({1, 0, 0}), translation({0, 1, 0}), translation({0, 0, 1})};
    auto d = recognize(g);
    CHECK(d == make_descriptor(CosmType::ma2, {Q(1, 4), Q(1, 4), Q(1, 4)}));
}

TEST_CASE("recognize rejects") {
    SpaceGroup g;
    g.gram = mat_identity();
    g.gens = {{to_q(IMat3{{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}}), {0, 0, 0}}, translation({1, 0, 0}),
              translation({0, 1, 0}), translation({0, 0, 1})};
    CHECK_THROWS_WITH_AS(recognize(g), doctest::Contains("HasFixedPoint"), DomainError);
    g.gens = {translation({1, 0, 0}), translation({0, 1, 0})};
    CHECK_THROWS_WITH_AS(recognize(g), doctest::Contains("NotCocompact"), DomainError);
}

TEST_CASE("double covers: counts and table agreement") {
    const int expect[10] = {7, 7, 1, 3, 1, 3, 7, 3, 7, 3};
    for (auto t : all_cosm_types()) {
        CHECK(static_cast<int>(sign_homomorphisms(t).size()) == expect[static_cast<int>(t)]);
        for (int seed = 0; seed < 2; ++seed) {
            auto d = sample(t, seed);
            for (auto& c : double_covers(d)) {
                CAPTURE(name(d));
                CAPTURE(sign_string(t, c.h));
                CAPTURE(name(c.table));
                CAPTURE(name(c.recognized));
                CHECK(c.agrees);
                CHECK(volume_sq(c.recognized) == 4 * volume_sq(d));
            }
        }
    }
}

TEST_CASE("random covers") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> u(1, 9);
    for (int it = 0; it < 40; ++it)
        for (auto t : {CosmType::c2, CosmType::pa1, CosmType::ma1, CosmType::pa2, CosmType::ma2, CosmType::c22}) {
            std::vector<Q> v;
            for (size_t k = 0; k < type_info(t).params.size(); ++k) v.push_back(u(rng));
            auto d = canonicalize(make_descriptor(t, v));
            for (auto& c : double_covers(d)) {
                CAPTURE(name(d));
                CAPTURE(sign_string(t, c.h));
                CAPTURE(name(c.table));
                CAPTURE(name(c.recognized));
                CHECK(c.agrees);
            }
        }
}

TEST_CASE("rigid automorphisms") {
    for (auto t : all_cosm_types()) {
        auto d = sample(t);
        for (auto& im : rigid_automorphisms(t)) {
            CAPTURE(name(d));
            CAPTURE(im[0] + "," + im[1] + "," + im[2]);
            bool aut = is_automorphism(d, im);
            if (t == CosmType::ma1) {
                CHECK_FALSE(aut);  // the listed images break X^-1W^-1XW = Z
                continue;
            }
            CHECK(aut);
            auto a = realize_automorphism(d, im);
            REQUIRE(a.has_value());
            CHECK(is_isometry(naming_lattice(d), *a) == true);
            CHECK_FALSE(is_inner(d, *a));
        }
    }
    CHECK(is_automorphism(sample(CosmType::ma1), {"WZ", "XZ", "Z"}));
}

TEST_CASE("inner and outer") {
    auto d = sample(CosmType::c2);
    CHECK(is_inner(d, translation({0, 0, 1})));
    CHECK(is_inner(d, translation({0, 0, Q(1, 3)})));
    CHECK_THROWS_AS(is_inner(d, translation({Q(1, 3), 0, 0})), DomainError);
}

TEST_CASE("didicosm outer automorphism relations") {
    std::vector<std::string> log;
    bool ok = c22_outer_relations_check(&log);
    std::string all;
    for (auto& l : log) all += l + "\n";
    CAPTURE(all);
    CHECK(ok);
}

TEST_CASE("splitting and the crystallographic restriction") {
    for (auto t : {CosmType::c2, CosmType::c3, CosmType::c4, CosmType::c6}) CHECK(helicosm_splits(sample(t)));
    for (int a = 1; a < 6; ++a)
        for (int b = 0; b < 4; ++b) {
            std::array<std::array<Q, 2>, 2> g = {{{Q(a), Q(b, 2)}, {Q(b, 2), Q(3)}}};
            if (4 * a * 3 - b * b <= 0) continue;
            for (int o : rotation_orders_2d(g)) CHECK(std::string("12346").find(char('0' + o)) != std::string::npos);
        }
}
