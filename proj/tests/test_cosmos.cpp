#include "doctest.h"
#include "platy/io.hpp"
#include "platy/tables.hpp"
#include "random_cosm.hpp"

#include <fstream>
#include <sstream>

using namespace platy;
using testing_support::random_descriptor;

namespace {

std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("type info") {
    CHECK(all_cosm_types().size() == 10);
    int orientable = 0;
    for (auto t : all_cosm_types()) {
        CHECK(parse_cosm_type(tag(t)) == t);
        orientable += type_info(t).orientable;
    }
    CHECK(orientable == 6);
    CHECK(parse_cosm_type("\xE2\x88\x92" "a2") == CosmType::ma2);  // unicode minus
    CHECK_THROWS_AS(parse_cosm_type("c5"), DomainError);
}

TEST_CASE("names") {
    CHECK(name(canonicalize(make_descriptor(CosmType::c3, {4, 1}))) == "c3^{4}_{1 1 1}");
    auto d = canonicalize(make_descriptor(CosmType::c22, {1, 2, 3}));
    CHECK(name(d).rfind("c22", 0) == 0);
}

TEST_CASE("canonicalize is idempotent and keeps the volume") {
    std::mt19937 rng(11);
    for (auto t : all_cosm_types())
        for (int i = 0; i < 20; ++i) {
            auto d = random_descriptor(t, rng);
            CAPTURE(name(d));
            CHECK(canonicalize(d) == d);
            auto T = translation_lattice(d);
            // the manifold is a fundamental domain of T cut into |P| pieces
            int P = type_info(t).point_group_order;
            CHECK(det(T.gram) == volume_sq(d) * (P * P));
            CHECK(T.index == type_info(t).index);
        }
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(validate(make_descriptor(CosmType::c3, {0, 1})), DomainError);
    CHECK_THROWS_AS(validate(make_descriptor(CosmType::c22, {1, -1, 1})), DomainError);
    CHECK_THROWS_AS(parse_descriptor(CosmType::c2, "D=1,A=1"), DomainError);
}

TEST_CASE("descriptor json round trip") {
    std::mt19937 rng(5);
    for (auto t : all_cosm_types())
        for (int i = 0; i < 10; ++i) {
            auto d = random_descriptor(t, rng);
            auto j = to_json(d);
            CHECK(descriptor_from_json(parse_json_text(j.dump())) == d);
        }
    auto j = parse_json_text(R"({"type":"-a1","params":{"D":"1/1","A":"2/1","B":"1/1","C":"1/1"},"chirality":null})");
    auto d = descriptor_from_json(j);
    CHECK(d.type == CosmType::ma1);
    CHECK(d.p("A") == 2);
}

TEST_CASE("group json round trip") {
    auto d = canonicalize(make_descriptor(CosmType::ma2, {3, 2, 7}));
    auto g = standard_generators(d);
    auto back = group_from_json(parse_json_text(to_json(g).dump()));
    CHECK(back.gram == g.gram);
    CHECK(back.gens == g.gens);
    CHECK(recognize(back) == d);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_json_text("[[1,2],\n [3,");
        FAIL("no throw");
    } catch (const DomainError& e) {
        CHECK(e.code == "ParseError");
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(q_from_json(parse_json_text("1.5")), DomainError);
}

TEST_CASE("catalog tables match the golden files") {
    for (int n : table_numbers()) {
        CAPTURE(n);
        CHECK(render_table(n) == slurp(std::string(GOLDEN_DIR) + "/table" + std::to_string(n) + ".txt"));
    }
    CHECK_THROWS_AS(render_table(2), DomainError);
}

TEST_CASE("surface families over basal vectors of the amphicosms") {
    for (auto t : {CosmType::pa1, CosmType::ma1}) {
        auto d = canonicalize(make_descriptor(t, {3, 2, 5, 1}));
        int K = 0, T = 0;
        for (int m = -3; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) {
                if (std::gcd(m, n) != 1) continue;
                (classify_basal_vector(d, m, n) == "2K" ? K : T)++;
            }
        // both families are infinite
        CHECK(K > 1);
        CHECK(T > 1);
    }
}
