#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "digitmap/errors.hpp"
#include "digitmap/hypotheses.hpp"

using namespace digitmap;

TEST_CASE("premises of the happy map") {
    const auto report = check_premises(DigitMap::power(2, 10));
    CHECK(report.ok);
    CHECK(report.top_value == 81);
    CHECK(report.m_star_candidates == std::vector<std::uint32_t>{2, 5, 8});
}

TEST_CASE("digit sum maps fail") {
    for (std::uint32_t b = 3; b <= 40; ++b) {
        std::vector<std::uint64_t> table(b);
        std::iota(table.begin(), table.end(), 0);
        const auto report = check_premises(DigitMap(b, table));
        CHECK_FALSE(report.ok);
        CHECK(report.m_star_candidates.empty());
    }
}

TEST_CASE("individual premise failures are reported") {
    const auto r = check_premises(DigitMap(10, {1, 1, 4, 9, 16, 25, 36, 49, 64, 81}));
    CHECK_FALSE(r.f0_ok);
    CHECK_FALSE(r.ok);
    const auto g = check_premises(DigitMap(10, {0, 1, 4, 9, 16, 25, 36, 49, 64, 80}));
    CHECK_FALSE(g.gcd_b_ok);
}

TEST_CASE("pan condition") {
    CHECK(pan_condition(2, 10).holds);
    CHECK_FALSE(pan_condition(2, 7).holds);   // p = 2 | 6 and 1 | 1
    CHECK_FALSE(pan_condition(3, 11).holds);  // p = 5 and 4 ∤ 2, but p = 2 gives 1 | 2
    CHECK(pan_condition(4, 4).holds);         // p = 3, 2 ∤ 3
}

TEST_CASE("construct_g") {
    const auto cert = construct_g(2, 10);
    CHECK(cert.valid);
    CHECK(cert.g == 2);
    CHECK(cert.gcd_with_top == 1);
    CHECK_THROWS_AS(construct_g(2, 7), PremiseFailure);
    CHECK(construct_g(3, 2).valid);

    for (std::uint32_t e = 2; e <= 6; ++e) {
        for (std::uint32_t b = 3; b <= 30; ++b) {
            if (!pan_condition(e, b).holds) continue;
            const auto c = construct_g(e, b);
            REQUIRE(c.valid);
            const auto report = check_premises(DigitMap::power(e, b));
            CHECK(std::ranges::find(report.m_star_candidates, c.g) != report.m_star_candidates.end());
        }
    }
}
