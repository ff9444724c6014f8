#pragma once

// Helpers shared by the witness generators and the verifier.

#include <string>

#include "digitmap/witness.hpp"

namespace digitmap::detail {

struct MapConstants {
    std::uint64_t modulus;       // f(b-1)
    std::uint32_t m_star;
    std::uint64_t m_star_value;  // f*(m*)
};

// Throws PremiseFailure unless the map satisfies every premise.
MapConstants require_premises(const DigitMap& map);

// f^r(w + y) for r >= 1, y >= 0, w dense or sparse.
BigInt iterate_shifted(const DigitMap& map, const Witness& w, const BigInt& y, std::uint64_t r);

Classification classify_shifted(const CycleAtlas& atlas, const Witness& w, const BigInt& y,
                                std::uint64_t u);

BigInt mod_floor(const BigInt& a, std::uint64_t q);

// Run of `x` ones at exponents s, s+1, ... where s = m_digits; nested r-1 deep.
struct ShiftBuild {
    SparseNumber l;
    std::vector<BigInt> level_starts;
    std::vector<BigInt> level_counts;
};
ShiftBuild build_shift(const DigitMap& map, const BigInt& x, const BigInt& m_digits,
                       std::uint64_t r, const WitnessOptions& options);

// Dense value of a witness or DepthExceeded naming `what`.
BigInt require_dense(std::uint32_t base, const Witness& w, std::uint64_t limit_digits,
                     const std::string& what);

std::string describe(const Witness& w);

}  // namespace digitmap::detail
