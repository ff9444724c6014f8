#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "digitmap/errors.hpp"
#include "digitmap/json_io.hpp"

using namespace digitmap;

TEST_CASE("map files") {
    CHECK(map_from_json(json::parse(R"({"base": 10, "exponent": 2})")) == DigitMap::power(2, 10));
    CHECK(map_from_json(json::parse(R"({"base": 3, "table": [0, 1, 5]})")) == DigitMap(3, {0, 1, 5}));
    CHECK_THROWS_AS(map_from_json(json::parse(R"({"base": 3})")), InvalidInput);
    CHECK_THROWS_AS(map_from_json(json::parse(R"({"base": 3, "table": [0, 1]})")), InvalidInput);
    CHECK_THROWS_AS(map_from_json(json::parse(R"({"base": 3, "table": [0, 1, -2]})")), InvalidInput);
}

TEST_CASE("sparse numbers round trip through json") {
    const SparseNumber s(10, {{0, 1, 3, 1}, {BigInt("100000000000000000000000"), 7, ipow(10, 30), 9}});
    const auto j = to_json(s);
    CHECK(j["runs"][1]["count"] == ipow(10, 30).str());
    CHECK(sparse_from_json(j) == s);
}

TEST_CASE("report payloads") {
    const CycleAtlas atlas(DigitMap::power(2, 10));
    const auto a = to_json(atlas);
    CHECK(a["threshold"] == 999);
    CHECK(a["cycles"].size() == 2);
    const auto c = to_json(atlas.classify(std::uint64_t{7}, 1), 7, 1);
    CHECK(c["is_u_integer"] == true);
    CHECK(to_json(RunRecord{1, 1880, 3, false}) ==
          json::parse(R"({"u": 1, "start": 1880, "length": 3, "clipped": false})"));
}
