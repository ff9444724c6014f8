#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>

#include "digitmap/atlas.hpp"
#include "digitmap/errors.hpp"

using namespace digitmap;

namespace {

// Smallest r >= 1 with f^r(n) == u, found by plain iteration.
std::optional<std::uint64_t> brute_steps(const DigitMap& map, std::uint64_t n, std::uint64_t u) {
    for (std::uint64_t r = 1; r < 5000; ++r) {
        n = map.eval(n);
        if (n == u) return r;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("happy map cycles") {
    const CycleAtlas atlas(DigitMap::power(2, 10));
    CHECK(atlas.threshold() == 999);
    const std::vector<std::vector<std::uint64_t>> expected{{1}, {4, 16, 37, 58, 89, 145, 42, 20}};
    CHECK(atlas.cycles() == expected);
    CHECK(atlas.attractor() == std::vector<std::uint64_t>{1, 4, 16, 20, 37, 42, 58, 89, 145});
    CHECK(atlas.cycle_length_of(42) == 8);
    CHECK_THROWS_AS(atlas.cycle_of(2), InvalidInput);
    CHECK(atlas.element_with_phase(4, 1) == 20);
    CHECK(atlas.element_with_phase(4, 0) == 4);
}

TEST_CASE("classification examples") {
    const CycleAtlas atlas(DigitMap::power(2, 10));
    const auto seven = atlas.classify(std::uint64_t{7}, 1);
    CHECK(seven.is_u_integer);
    CHECK(seven.steps_to_u == 5);
    CHECK(seven.phase == 0);
    const auto two = atlas.classify(std::uint64_t{2}, 4);
    CHECK(two.steps_to_u == 1);
    CHECK(two.phase == 1);
    CHECK(atlas.classify(std::uint64_t{4}, 4).steps_to_u == 8);
    CHECK_FALSE(atlas.classify(std::uint64_t{2}, 1).is_u_integer);
    CHECK(atlas.classify(ipow(10, 40), 1).steps_to_u == 1);
    CHECK(atlas.classify(SparseNumber::run(10, 0, 1, 1'000'000, 1), 1).is_u_integer ==
          atlas.classify(std::uint64_t{1'000'000}, 1).is_u_integer);
}

TEST_CASE("classification agrees with iteration and concurrency with brute force") {
    const DigitMap map = DigitMap::power(2, 10);
    const CycleAtlas atlas(map);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t m = 1 + rng() % 100'000, n = 1 + rng() % 100'000;
        for (std::uint64_t u : {1u, 4u, 89u}) {
            const auto sm = brute_steps(map, m, u), sn = brute_steps(map, n, u);
            const auto cm = atlas.classify(m, u);
            REQUIRE(cm.is_u_integer == sm.has_value());
            if (sm) REQUIRE(cm.steps_to_u == *sm);
            const bool brute = sm && sn && *sm % cm.cycle_length == *sn % cm.cycle_length;
            REQUIRE(atlas.are_concurrent(m, n, u) == brute);
            REQUIRE(atlas.are_concurrent(BigInt(m), SparseNumber::from_dense(10, n), u) == brute);
        }
    }
}

TEST_CASE("concurrency is an equivalence on u-integers") {
    const CycleAtlas atlas(DigitMap::power(2, 10));
    std::vector<std::uint64_t> sample;
    for (std::uint64_t n = 1; n < 200; ++n) {
        if (atlas.classify(n, 4).is_u_integer) sample.push_back(n);
    }
    for (auto a : sample) {
        for (auto b : sample) {
            for (auto c : sample) {
                if (atlas.are_concurrent(a, b, 4) && atlas.are_concurrent(b, c, 4)) {
                    REQUIRE(atlas.are_concurrent(a, c, 4));
                }
            }
        }
    }
}

TEST_CASE("base 3 maps") {
    const CycleAtlas five(DigitMap(3, {0, 1, 5}));
    CHECK(five.cycles() == std::vector<std::vector<std::uint64_t>>{{1}, {5, 6}});
    const CycleAtlas eleven(DigitMap(3, {0, 1, 11}));
    CHECK(eleven.cycles() == std::vector<std::vector<std::uint64_t>>{{1}, {2, 11, 12}, {23}});
}

TEST_CASE("orbits through zero") {
    const CycleAtlas atlas(DigitMap(10, {0, 1, 0, 9, 16, 25, 36, 49, 64, 81}));
    CHECK(atlas.classify(std::uint64_t{2}, 1).cycle_index == kReachesZero);
    CHECK(atlas.cycle_index(20) == kReachesZero);
}
