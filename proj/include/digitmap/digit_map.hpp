#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "digitmap/bigint.hpp"

namespace digitmap {

/// A base b together with a digit table f*(0..b-1). The digit map f sends
/// n = sum a_i b^i to sum f*(a_i).
///
/// Construction only checks shape (table length, entry range). Whether the
/// table satisfies f*(0)=0, f*(1)=1 etc. is a separate question answered by
/// check_premises().
class DigitMap {
public:
    // Table entries are capped so that f(n) of any 64-bit n stays in range.
    static constexpr std::uint64_t kMaxTableEntry = std::uint64_t{1} << 40;
    static constexpr std::uint32_t kMaxBase = 1U << 16;

    DigitMap(std::uint32_t base, std::vector<std::uint64_t> table);

    /// f*(m) = m^e for m in [0, b).
    static DigitMap power(std::uint32_t exponent, std::uint32_t base);

    std::uint32_t base() const { return base_; }
    std::span<const std::uint64_t> table() const { return table_; }
    std::uint64_t digit_value(std::uint32_t digit) const { return table_.at(digit); }
    std::uint64_t max_digit_value() const { return max_value_; }
    /// f(b-1). A single digit, so f(b-1) == f*(b-1).
    std::uint64_t top_digit_value() const { return table_.back(); }

    std::uint64_t eval(std::uint64_t n) const;
    BigInt eval(const BigInt& n) const;

    std::uint64_t iterate(std::uint64_t n, std::uint64_t steps) const;
    BigInt iterate(BigInt n, std::uint64_t steps) const;

    friend bool operator==(const DigitMap&, const DigitMap&) = default;

private:
    std::uint32_t base_;
    std::vector<std::uint64_t> table_;
    std::uint64_t max_value_ = 0;
};

/// Explicit bound T with f(n) < n for every n > T: T = b^(d-1) - 1 where d is
/// the least digit count with d * max f* < b^(d-1). All cycles lie in [1, T].
std::uint64_t threshold(const DigitMap& map);

}  // namespace digitmap
