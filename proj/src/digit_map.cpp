#include "digitmap/digit_map.hpp"

#include <algorithm>
#include <string>

#include "digitmap/errors.hpp"

namespace digitmap {

DigitMap::DigitMap(std::uint32_t base, std::vector<std::uint64_t> table)
    : base_(base), table_(std::move(table)) {
    if (base_ < 2 || base_ > kMaxBase) {
        throw InvalidInput("base must lie in [2, " + std::to_string(kMaxBase) + "]");
    }
    if (table_.size() != base_) {
        throw InvalidInput("digit table has " + std::to_string(table_.size()) +
                           " entries, base is " + std::to_string(base_));
    }
    for (auto v : table_) {
        if (v > kMaxTableEntry) throw InvalidInput("digit table entry too large: " + std::to_string(v));
    }
    max_value_ = *std::max_element(table_.begin(), table_.end());
}

DigitMap DigitMap::power(std::uint32_t exponent, std::uint32_t base) {
    if (base < 2 || base > kMaxBase) throw InvalidInput("base must be at least 2");
    std::vector<std::uint64_t> table(base);
    for (std::uint32_t m = 0; m < base; ++m) {
        unsigned __int128 value = 1;
        for (std::uint32_t i = 0; i < exponent; ++i) {
            value *= m;
            if (value > kMaxTableEntry) {
                throw InvalidInput("power map entry " + std::to_string(m) + "^" +
                                   std::to_string(exponent) + " is too large");
            }
        }
        table[m] = static_cast<std::uint64_t>(value);
    }
    return DigitMap(base, std::move(table));
}

std::uint64_t DigitMap::eval(std::uint64_t n) const {
    std::uint64_t sum = 0;
    while (n != 0) {
        sum += table_[n % base_];
        n /= base_;
    }
    return sum;
}

BigInt DigitMap::eval(const BigInt& n) const {
    if (fits_u64(n)) return eval(static_cast<std::uint64_t>(n));
    // Peel off as many digits per division as fit in a machine word.
    std::uint64_t chunk_base = base_;
    unsigned chunk_digits = 1;
    while (chunk_base <= std::numeric_limits<std::uint64_t>::max() / base_) {
        chunk_base *= base_;
        ++chunk_digits;
    }
    BigInt rest = n;
    BigInt sum = 0;
    std::uint64_t partial = 0;
    while (rest != 0) {
        BigInt quotient;
        BigInt remainder;
        boost::multiprecision::divide_qr(rest, BigInt(chunk_base), quotient, remainder);
        auto chunk = static_cast<std::uint64_t>(remainder);
        if (quotient == 0) {
            partial += eval(chunk);
        } else {
            for (unsigned i = 0; i < chunk_digits; ++i) {
                partial += table_[chunk % base_];
                chunk /= base_;
            }
        }
        if (partial > (std::uint64_t{1} << 62)) {
            sum += partial;
            partial = 0;
        }
        rest = std::move(quotient);
    }
    return sum + partial;
}

std::uint64_t DigitMap::iterate(std::uint64_t n, std::uint64_t steps) const {
    for (std::uint64_t i = 0; i < steps; ++i) n = eval(n);
    return n;
}

BigInt DigitMap::iterate(BigInt n, std::uint64_t steps) const {
    for (std::uint64_t i = 0; i < steps; ++i) n = eval(n);
    return n;
}

std::uint64_t threshold(const DigitMap& map) {
    const std::uint64_t max_value = map.max_digit_value();
    unsigned __int128 power = 1;  // b^(d-1)
    for (std::uint64_t d = 1;; ++d) {
        if (static_cast<unsigned __int128>(d) * max_value < power) {
            return std::max<std::uint64_t>(static_cast<std::uint64_t>(power - 1), 1);
        }
        power *= map.base();
    }
}

}  // namespace digitmap
