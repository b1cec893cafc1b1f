#include <catch2/catch_amalgamated.hpp>

#include "gapset/formats.hpp"
#include "gapset/oracle.hpp"

using namespace gapset;

TEST_CASE("textual formats", "[formats]") {
    CHECK(render_gaps(from_generators({2, 3})) == "gaps:1");
    CHECK(render_gaps(from_gaps({1, 2, 4})) == "gaps:1,2,4");
    CHECK(render_gaps(NumericalSemigroup{}) == "gaps:");
    CHECK(render_gens(from_gaps({1, 2, 3, 6, 7})) == "gens:4,5,11");

    CHECK(parse_semigroup("gaps:1,2,4") == from_gaps({1, 2, 4}));
    CHECK(parse_semigroup("gens:3,5,7") == from_generators({3, 5, 7}));
    CHECK(parse_semigroup("gaps:") == NumericalSemigroup{});

    CHECK_THROWS_AS(parse_semigroup("semigroup:1,2"), MalformedInputError);
    CHECK_THROWS_AS(parse_semigroup("gaps:1,x"), MalformedInputError);
    CHECK_THROWS_AS(parse_semigroup("gaps:2"), MalformedInputError);
    CHECK_THROWS_AS(parse_semigroup("gens:4,6"), NotCofiniteError);
}

TEST_CASE("json schema", "[formats]") {
    const auto j = semigroup_json(from_generators({4, 5, 11}));
    CHECK(j["frobenius"] == 7);
    CHECK(j["genus"] == 5);
    CHECK(j["multiplicity"] == 4);
    CHECK(j["type"] == 2);
    CHECK(j["depth"] == 2);
    CHECK(j["gaps"] == nlohmann::json({1, 2, 3, 6, 7}));
    CHECK(j["pf"] == nlohmann::json({6, 7}));
    CHECK(j["min_gens"] == nlohmann::json({4, 5, 11}));

    const auto n = semigroup_json(NumericalSemigroup{});
    CHECK(n["frobenius"] == -1);
    CHECK(n["type"] == 0);
    CHECK(n["pf"].empty());
    CHECK(n["min_gens"] == nlohmann::json({1}));

    CHECK_THROWS_AS(semigroup_from_json(nlohmann::json::object()), MalformedInputError);
}

TEST_CASE("formats round trip over the genus tree", "[formats]") {
    for (Int g = 0; g <= 6; ++g)
        for (const auto& s : oracle::tree_enumerate_by_genus(g)) {
            CHECK(parse_semigroup(render_gaps(s)) == s);
            CHECK(parse_semigroup(render_gens(s)) == s);
            CHECK(semigroup_from_json(semigroup_json(s)) == s);
            CHECK(semigroup_from_json(nlohmann::json::parse(semigroup_json(s).dump())) == s);
        }
}
