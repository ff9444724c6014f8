#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "digitmap/errors.hpp"
#include "digitmap/witness.hpp"

using namespace digitmap;

namespace {

const CycleAtlas& happy() {
    static const CycleAtlas atlas(DigitMap::power(2, 10));
    return atlas;
}

WitnessOptions construct() {
    WitnessOptions o;
    o.strategy = Strategy::Construct;
    return o;
}

bool failed(const VerificationReport& report, const std::string& name) {
    return std::ranges::any_of(report.checks, [&](const CheckResult& c) { return c.name == name && !c.passed; });
}

}  // namespace

TEST_CASE("shift witness examples") {
    const auto t = shift_witness(happy(), 3, 99, 1, construct());
    CHECK(t.verification.ok());
    CHECK(as_dense(10, t.output, 100) == BigInt(11100));

    const auto deep = shift_witness(happy(), 2, 9, 2, construct());
    CHECK(deep.verification.ok());
    CHECK(as_sparse(10, deep.output).digit_length() == 1101);

    const auto searched = shift_witness(happy(), 3, 99, 1);
    CHECK(searched.verification.ok());
    CHECK(std::get<BigInt>(searched.output) <= 11100);
}

TEST_CASE("shift witness on base 3 maps") {
    for (const auto& table : {std::vector<std::uint64_t>{0, 1, 5}, std::vector<std::uint64_t>{0, 1, 11}}) {
        const CycleAtlas atlas(DigitMap(3, table));
        for (std::uint64_t x = 1; x <= 10; ++x) {
            for (std::uint64_t m : {1u, 7u, 40u}) {
                for (std::uint64_t r = 1; r <= 2; ++r) {
                    try {
                        const auto t = shift_witness(atlas, x, m, r, construct());
                        REQUIRE(t.verification.ok());
                    } catch (const DepthExceeded&) {
                        // Expansion past the dense limit is an allowed outcome.
                    }
                }
            }
        }
    }
}

TEST_CASE("congruent preimage") {
    const auto searched = congruent_u_preimage(happy(), 1, 0, 1);
    CHECK(searched.verification.ok());
    CHECK(std::get<BigInt>(searched.output) == 1215);

    for (std::uint64_t a : {0u, 1u, 17u, 80u}) {
        const auto t = congruent_u_preimage(happy(), 1, a, 1, construct());
        REQUIRE(t.verification.ok());
        CHECK(residue(as_sparse(10, t.output), 81) == a);
    }
    for (std::uint64_t a : {0u, 40u}) {
        const auto t = congruent_u_preimage(happy(), 4, a, 2, construct());
        REQUIRE(t.verification.ok());
        CHECK(happy().are_concurrent(as_sparse(10, t.output), std::uint64_t{2}, 4));
    }
}

TEST_CASE("symbolic preimage chains") {
    auto o = construct();
    o.seed_element = SeedElement::FromU;
    auto t = congruent_u_preimage(happy(), 4, 5, 4, o);
    REQUIRE(std::holds_alternative<DeepWitness>(t.output));
    CHECK(t.verification.ok());

    auto& deep = std::get<DeepWitness>(t.output);
    deep.residue = (deep.residue + 1) % deep.modulus;
    const auto report = verify_witness(happy(), t);
    CHECK_FALSE(report.ok());
    CHECK(failed(report, "declared residue matches the chain"));
}

TEST_CASE("concurrent pair") {
    const std::vector<std::uint64_t> expected{4, 9, 11, 8, 9};
    for (std::uint64_t x = 1; x <= 5; ++x) {
        const auto t = concurrent_pair(happy(), 4, x);
        REQUIRE(t.verification.ok());
        CHECK(std::get<BigInt>(t.output) == expected[x - 1]);
    }
    CHECK(std::get<BigInt>(concurrent_pair(happy(), 1, 1).output) == 31);

    auto t = concurrent_pair(happy(), 1, 1, construct());
    REQUIRE(t.verification.ok());
    CHECK(as_dense(10, t.output, 100) == BigInt("999999999999999"));
    const auto& pair = std::get<PairDetail>(t.detail);
    CHECK(pair.k == 14);
    CHECK(pair.h_prime == 1215);

    std::get<PairDetail>(t.detail).k += 1;
    const auto tampered = verify_witness(happy(), t);
    CHECK(failed(tampered, "f(l) = h"));
}

TEST_CASE("shift to every cycle number") {
    const auto four = shift_all_witness(happy(), 4);
    CHECK(four.verification.ok());
    CHECK(std::get<BigInt>(four.output) == 1);

    const auto one = shift_all_witness(happy(), 1);
    CHECK(one.verification.ok());

    const CycleAtlas five(DigitMap(3, {0, 1, 5}));
    auto deeper = construct();
    deeper.depth_limit = 3;
    for (std::uint64_t u : {1u, 5u, 6u}) {
        CHECK(shift_all_witness(five, u).verification.ok());
        CHECK(shift_all_witness(five, u, deeper).verification.ok());
    }
    CHECK_THROWS_AS(shift_all_witness(five, 6, construct()), DepthExceeded);
    CHECK(as_dense(3, shift_all_witness(five, 5, construct()).output, 100) == BigInt(1090));
}

TEST_CASE("consecutive runs") {
    const std::vector<std::uint64_t> ones{6, 30, 1879, 7838, 44487};
    for (std::uint64_t n = 1; n <= 5; ++n) {
        const auto t = consecutive_run(happy(), 1, n);
        REQUIRE(t.verification.ok());
        CHECK(std::get<BigInt>(t.output) == ones[n - 1]);
    }
    CHECK(std::get<BigInt>(consecutive_run(happy(), 4, 5).output) == 1);
    CHECK(std::get<BigInt>(consecutive_run(happy(), 4, 6).output) == 32);

    const auto built = consecutive_run(happy(), 4, 2, construct());
    CHECK(built.verification.ok());
    CHECK(as_dense(10, built.output, 100) == BigInt(10));
    CHECK_THROWS_AS(consecutive_run(happy(), 4, 3, construct()), DepthExceeded);

    const CycleAtlas five(DigitMap(3, {0, 1, 5}));
    auto deep = construct();
    deep.depth_limit = 4;
    for (std::uint64_t u : {1u, 5u}) {
        try {
            CHECK(consecutive_run(five, u, 3, deep).verification.ok());
        } catch (const DepthExceeded&) {
        }
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(congruent_u_preimage(happy(), 2, 0, 1), InvalidInput);
    CHECK_THROWS_AS(concurrent_pair(happy(), 1, 0), InvalidInput);
    const CycleAtlas sums(DigitMap(10, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
    CHECK_THROWS_AS(concurrent_pair(sums, 1, 1, construct()), PremiseFailure);
    auto tight = WitnessOptions{};
    tight.search_budget = 3;
    CHECK_THROWS_AS(consecutive_run(happy(), 1, 3, tight), BudgetExceeded);
}
