#include "doctest.h"
#include "platy/bravo.hpp"
#include "platy/voronoi.hpp"

#include <map>
#include <random>
#include <set>

using namespace platy;

static Conorms3 diag(std::array<int, 7> v) {
    Conorms3 d;
    for (int i = 0; i < 7; ++i) d.v[i] = v[i];
    return d;
}

TEST_CASE("named examples") {
    auto cubic = diag({1, 1, 1, 0, 0, 0, 0});
    CHECK(voronoi_type(cubic) == VoronoiType::rC);
    CHECK(bravo_class(cubic).letter == 'X');
    CHECK(bravais_class('X').name == "primitive Cubic");
    CHECK(bravo_class(diag({1, 1, 1, 1, 1, 1, 0})).letter == 'H');
    CHECK(bravais_class('H').name == "body-centered Cubic (bcc)");
    CHECK(bravo_class(diag({1, 1, 2, 0, 0, 0, 0})).letter == 'W');
    CHECK(bravais_class('B').name == "base-centered Monoclinic");
    CHECK(bravais_class('R').symmetry_factor == 24);
    CHECK(bravais_class('V').symmetry_factor == 4);
    CHECK(voronoi_type(diag({1, 2, 3, 0, 0, 0, 1})) == VoronoiType::rD);
    CHECK_THROWS_AS(voronoi_type(diag({1, 1, 0, 0, 0, 0, 0})), DomainError);
}

TEST_CASE("table counts") {
    std::map<VoronoiType, int> per;
    for (char c : all_letters()) per[bravo_info(c).voronoi]++;
    CHECK(all_letters().size() == 24);
    CHECK(per[VoronoiType::tO] == 8);
    CHECK(per[VoronoiType::hD] == 5);
    CHECK(per[VoronoiType::rD] == 5);
    CHECK(per[VoronoiType::hP] == 3);
    CHECK(per[VoronoiType::rC] == 3);
    CHECK(all_bravais_classes().size() == 14);
    for (char c : all_letters()) CHECK(bravais_class(c).symmetry_factor == bravo_info(c).symmetry_factor);
}

TEST_CASE("random diagrams against oracles") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> small(0, 2), wide(0, 7);
    std::set<char> seen;
    const std::map<VoronoiType, std::pair<int, int>> sig = {{VoronoiType::tO, {14, 24}},
                                                           {VoronoiType::hD, {12, 18}},
                                                           {VoronoiType::rD, {12, 14}},
                                                           {VoronoiType::hP, {8, 12}},
                                                           {VoronoiType::rC, {6, 8}}};
    // a few hand-made members of the rarest classes, then random draws
    std::vector<Conorms3> fixed = {diag({1, 2, 3, 3, 2, 1, 0}), diag({1, 1, 1, 1, 1, 1, 0})};
    int n = 0;
    while (n < 500) {
        Conorms3 d;
        if (n < static_cast<int>(fixed.size()))
            d = fixed[n];
        else
            for (int i = 0; i < 6; ++i) d.v[i] = (n % 2) ? small(rng) : wide(rng);
        d.v[PQ] = 0;
        if (determinant(d) == 0) continue;
        ++n;
        auto b = bravo_class(d);
        seen.insert(b.letter);
        auto g = gram_of(d);
        CHECK(static_cast<int>(lattice_automorphisms(g).size()) == 2 * b.symmetry_factor);
        auto cell = voronoi_cell(g);
        auto s = sig.at(voronoi_type(d));
        CHECK(cell.faces == s.first);
        CHECK(static_cast<int>(cell.vertices.size()) == s.second);
    }
    std::string missing;
    for (char c : all_letters())
        if (!seen.count(c)) missing += c;
    CHECK(missing == "");
}

TEST_CASE("2d classes") {
    auto a = classify2d(Conorms2{{1, 2, 3}});
    CHECK(a.shape == "generic lattice");
    CHECK(a.delaunay == "scalene triangle");
    CHECK(classify2d(Conorms2{{1, 1, 0}}).shape == "square lattice");
    CHECK(classify2d(Conorms2{{1, 1, 0}}).voronoi == "rectangular");
    CHECK(classify2d(Conorms2{{1, 1, 1}}).delaunay == "equilateral triangle");
    CHECK_THROWS_AS(classify2d(Conorms2{{1, 0, 0}}), DomainError);
    CHECK(platycosm_bravais_types("c2").patterns.size() == 5);
    CHECK(platycosm_bravais_types("c22").patterns.size() == 3);
    CHECK(platycosm_bravais_types("-a2").patterns.size() == 1);
    int total = 0;
    for (auto t : {"c1", "c2", "c3", "c4", "c6", "c22", "+a1", "-a1", "+a2", "-a2"})
        total += static_cast<int>(platycosm_bravais_types(t).patterns.size());
    CHECK(total == 37);
}
