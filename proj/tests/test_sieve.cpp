#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "digitmap/sieve.hpp"

using namespace digitmap;

namespace {

const CycleAtlas& happy() {
    static const CycleAtlas atlas(DigitMap::power(2, 10));
    return atlas;
}

}  // namespace

TEST_CASE("first runs of the happy map") {
    const Sieve sieve(happy());
    CHECK(sieve.first_run_of_length(1, 1, 1000)->start == 1);
    CHECK(sieve.first_run_of_length(1, 2, 1000)->start == 31);
    CHECK(sieve.first_run_of_length(1, 4, 100'000)->start == 7839);
    CHECK(sieve.first_run_of_length(1, 5, 100'000)->start == 44488);
    CHECK(sieve.first_run_of_length(4, 2, 100)->start == 2);
    CHECK_FALSE(sieve.first_run_of_length(1, 5, 40'000).has_value());

    const auto runs = sieve.find_runs(1, 10'000, 3);
    REQUIRE_FALSE(runs.empty());
    CHECK(runs.front() == RunRecord{1, 1880, 3, false});
    const auto fours = sieve.find_runs(4, 10, 5);
    REQUIRE(fours.size() == 1);
    CHECK(fours.front().start == 2);
    CHECK(fours.front().length >= 5);
}

TEST_CASE("counts and clipping") {
    const Sieve sieve(happy());
    const auto cls = sieve.classify_range(1, 1000);
    CHECK(std::count(cls.begin(), cls.end(), 0) == 143);
    const auto runs = sieve.find_runs(4, 6, 1);
    REQUIRE(runs.size() == 1);
    CHECK(runs.front() == RunRecord{4, 2, 5, true});
}

TEST_CASE("agrees with iteration and is thread independent") {
    const Sieve sieve(happy());
    const auto& map = happy().map();
    const auto one = sieve.classify_range(1, 200'000, 1);
    for (std::uint64_t n = 1; n <= 200'000; ++n) {
        std::uint64_t v = n;
        while (!happy().in_attractor(v)) v = map.eval(v);
        REQUIRE(one[n - 1] == static_cast<std::int32_t>(happy().cycle_of(v)));
    }
    for (unsigned threads : {2u, 3u, 8u}) {
        CHECK(sieve.classify_range(1, 200'000, threads) == one);
        CHECK(sieve.find_runs(1, 600'000, 2, threads) == sieve.find_runs(1, 600'000, 2, 1));
    }
    CHECK(sieve.classify(ipow(10, 12).convert_to<std::uint64_t>() + 3) ==
          happy().cycle_index(ipow(10, 12).convert_to<std::uint64_t>() + 3));
}
