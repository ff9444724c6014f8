#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "digitmap/errors.hpp"
#include "digitmap/sparse_number.hpp"

using namespace digitmap;

namespace {

SparseNumber random_sparse(std::mt19937_64& rng, std::uint32_t base, int max_runs) {
    std::vector<DigitRun> runs;
    std::uint64_t cursor = rng() % 4;
    const int n = rng() % (max_runs + 1);
    for (int i = 0; i < n; ++i) {
        const std::uint64_t stride = 1 + rng() % 4;
        const std::uint64_t count = 1 + rng() % 6;
        const auto digit = static_cast<std::uint32_t>(1 + rng() % (base - 1));
        runs.push_back({cursor, stride, count, digit});
        cursor += (count - 1) * stride + 1 + rng() % 5;
    }
    return SparseNumber(base, runs);
}

// Digit-by-digit reference value.
BigInt reference_value(const SparseNumber& s) {
    BigInt v = 0;
    for (const auto& r : s.runs()) {
        for (BigInt i = 0; i < r.count; ++i) v += BigInt(r.digit) * ipow(s.base(), to_u64(r.start + i * r.stride));
    }
    return v;
}

}  // namespace

TEST_CASE("round trip through dense values") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 10'000; ++i) {
        const std::uint32_t base = 2 + rng() % 15;
        const std::uint64_t n = rng() % 1'000'000'000'000'000'000ULL;
        const auto s = SparseNumber::from_dense(base, n);
        REQUIRE(s.to_dense(100) == n);
    }
}

TEST_CASE("f_eval agrees with eval") {
    std::mt19937_64 rng(2);
    const auto happy = DigitMap::power(2, 10);
    for (int i = 0; i < 10'000; ++i) {
        const BigInt n = BigInt(rng()) * rng() + rng();
        REQUIRE(f_eval(happy, SparseNumber::from_dense(10, n)) == happy.eval(n));
    }
    const auto cubes = DigitMap::power(3, 7);
    for (int i = 0; i < 1000; ++i) {
        const auto s = random_sparse(rng, 7, 6);
        REQUIRE(f_eval(cubes, s) == cubes.eval(s.to_dense(1000)));
    }
}

TEST_CASE("geom_sum_mod agrees with the accumulation loop") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint64_t q = 1 + rng() % 5000;
        const std::uint64_t rho = rng() % 100'000;
        std::uint64_t sum = 0, term = 1 % q;
        for (std::uint64_t count = 0; count <= 1000; ++count) {
            REQUIRE(geom_sum_mod(rho, count, q) == sum);
            sum = (sum + term) % q;
            term = term * (rho % q) % q;
        }
    }
}

TEST_CASE("residue agrees with dense reduction") {
    std::mt19937_64 rng(4);
    int checked = 0;
    while (checked < 5000) {
        const std::uint32_t base = 2 + rng() % 15;
        const std::uint64_t q = 1 + rng() % 10'000;
        if (std::gcd<std::uint64_t>(base, q) != 1) continue;
        const auto s = random_sparse(rng, base, 6);
        REQUIRE(residue(s, q) == static_cast<std::uint64_t>(s.to_dense(1000) % q));
        ++checked;
    }
    CHECK_THROWS_AS(residue(SparseNumber::from_dense(10, 5), 4), InvalidInput);
}

TEST_CASE("residue of a huge run") {
    // 10^20 nines: value 10^(10^20) - 1; ord_81(10) = 9 and 10^20 = 1 (mod 9).
    const auto s = SparseNumber::run(10, 0, 1, ipow(10, 20), 9);
    CHECK(residue(s, 81) == 9);
    CHECK(residue(s, 7) == 3);
}

TEST_CASE("normalization and structure") {
    const SparseNumber s(10, {{5, 1, 2, 3}, {0, 2, 2, 1}, {3, 1, 2, 3}, {9, 7, 0, 4}});
    // runs: ones at 0 and 2; threes at 3..6 fused
    REQUIRE(s.runs().size() == 2);
    CHECK(s.runs()[1] == DigitRun{3, 1, 4, 3});
    CHECK(s.to_dense(20) == 3333101);
    CHECK(s.digit_length() == 7);
    CHECK(s.digit_at(1) == 0);
    CHECK(s.digit_at(4) == 3);
    CHECK_THROWS_AS(SparseNumber(10, {{0, 2, 3, 1}, {3, 1, 1, 2}}), OverlapError);
    CHECK_THROWS_AS(SparseNumber(10, {{0, 1, 1, 10}}), InvalidInput);
    CHECK_THROWS_AS(SparseNumber::run(10, 0, 1, 200, 1).to_dense(100), TooLarge);
    CHECK(SparseNumber(10).is_zero());
}

TEST_CASE("add_disjoint and add_small agree with integer addition") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const std::uint32_t base = 2 + rng() % 15;
        const auto s = random_sparse(rng, base, 5);
        const BigInt sv = s.to_dense(1000);
        const BigInt y = rng() % 100'000;
        REQUIRE(add_small(s, y).to_dense(1000) == sv + y);
        if (sv >= y) REQUIRE(sub_small(s, y).to_dense(1000) == sv - y);
        REQUIRE(reference_value(s) == sv);

        const auto shift = s.digit_length() + rng() % 3;
        const auto high = random_sparse(rng, base, 3);
        std::vector<DigitRun> moved;
        for (auto r : high.runs()) {
            r.start += shift;
            moved.push_back(r);
        }
        const SparseNumber t(base, moved);
        REQUIRE(add_disjoint(s, t).to_dense(2000) == sv + t.to_dense(2000));
    }
    CHECK_THROWS_AS(add_disjoint(SparseNumber::from_dense(10, 12), SparseNumber::from_dense(10, 10)),
                    OverlapError);
}

TEST_CASE("carries through huge runs stay symbolic") {
    const BigInt count = ipow(10, 100);
    const auto nines = SparseNumber::run(10, 0, 1, count, 9);
    const auto up = add_small(nines, 1);
    REQUIRE(up.runs().size() == 1);
    CHECK(up.runs()[0] == DigitRun{count, 1, 1, 1});
    CHECK(sub_small(up, 1) == nines);
}
