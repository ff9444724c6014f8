#include "digitmap/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace digitmap {

BigInt parse_bigint(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    BigInt value = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("not a non-negative integer: " + std::string(text));
        }
        value = value * 10 + (ch - '0');
    }
    return value;
}

std::uint64_t digit_count(const BigInt& n, std::uint32_t base) {
    if (fits_u64(n)) return digit_count(static_cast<std::uint64_t>(n), base);
    // Estimate from the bit length, then correct.
    const double bits = static_cast<double>(boost::multiprecision::msb(n)) + 1.0;
    std::uint64_t guess = static_cast<std::uint64_t>(bits / std::log2(static_cast<double>(base)));
    if (guess > 2) guess -= 2;
    BigInt power = ipow(base, guess);
    while (power <= n) {
        power *= base;
        ++guess;
    }
    return guess;
}

std::uint64_t digit_count(std::uint64_t n, std::uint32_t base) {
    std::uint64_t count = 0;
    while (n != 0) {
        n /= base;
        ++count;
    }
    return count;
}

BigInt ipow(std::uint32_t base, std::uint64_t exponent) {
    BigInt result = 1;
    BigInt square = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= square;
        exponent >>= 1U;
        if (exponent != 0) square *= square;
    }
    return result;
}

std::uint64_t to_u64(const BigInt& n) {
    if (!fits_u64(n)) throw std::overflow_error("integer does not fit in 64 bits: " + n.str());
    return static_cast<std::uint64_t>(n);
}

}  // namespace digitmap
