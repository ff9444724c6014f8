#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "digitmap/digit_map.hpp"
#include "digitmap/errors.hpp"

using namespace digitmap;

TEST_CASE("happy map evaluation") {
    const auto map = DigitMap::power(2, 10);
    CHECK(map.eval(std::uint64_t{0}) == 0);
    CHECK(map.eval(std::uint64_t{7}) == 49);
    CHECK(map.eval(std::uint64_t{145}) == 42);
    CHECK(map.eval(std::uint64_t{999}) == 243);
    CHECK(map.eval(~std::uint64_t{0}) == 515);
    CHECK(map.eval(ipow(10, 30) + 7) == 50);
    CHECK(map.iterate(std::uint64_t{7}, 5) == 1);
    CHECK(map.top_digit_value() == 81);
}

TEST_CASE("BigInt evaluation matches machine evaluation") {
    std::mt19937_64 rng(7);
    for (std::uint32_t base : {2u, 3u, 7u, 10u, 16u, 255u}) {
        std::vector<std::uint64_t> table(base);
        for (std::uint32_t d = 1; d < base; ++d) table[d] = rng() % 1000;
        const DigitMap map(base, table);
        for (int i = 0; i < 2000; ++i) {
            const std::uint64_t n = rng() >> (rng() % 60);
            CHECK(map.eval(BigInt(n)) == map.eval(n));
        }
    }
}

TEST_CASE("threshold bounds growth") {
    CHECK(threshold(DigitMap::power(2, 10)) == 999);
    CHECK(threshold(DigitMap::power(1, 10)) >= 1);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint32_t base = 3 + rng() % 14;
        std::vector<std::uint64_t> table(base);
        for (std::uint32_t d = 1; d < base; ++d) table[d] = rng() % 200;
        const DigitMap map(base, table);
        const std::uint64_t t = threshold(map);
        for (std::uint64_t n = t + 1; n < t + 3000; ++n) CHECK(map.eval(n) < n);
    }
}

TEST_CASE("construction validates shape") {
    CHECK_THROWS_AS(DigitMap(1, {0}), InvalidInput);
    CHECK_THROWS_AS(DigitMap(10, {0, 1, 2}), InvalidInput);
    CHECK_THROWS_AS(DigitMap(3, {0, 1, DigitMap::kMaxTableEntry + 1}), InvalidInput);
}
