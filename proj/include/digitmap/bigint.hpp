#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace digitmap {

using BigInt = boost::multiprecision::cpp_int;

// Parses a non-negative decimal string; throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

inline std::string to_string(const BigInt& value) { return value.str(); }

// Number of base-b digits of n; digit_count(0) == 0.
std::uint64_t digit_count(const BigInt& n, std::uint32_t base);
std::uint64_t digit_count(std::uint64_t n, std::uint32_t base);

BigInt ipow(std::uint32_t base, std::uint64_t exponent);

// Exact conversion; throws std::overflow_error when n does not fit.
std::uint64_t to_u64(const BigInt& n);

inline bool fits_u64(const BigInt& n) {
    return n >= 0 && n <= std::numeric_limits<std::uint64_t>::max();
}

}  // namespace digitmap
