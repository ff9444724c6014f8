#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Exact arithmetic on machine-range integers. The moduli that appear here
// are f(b-1) and b-1, which are digit-scale quantities.
namespace digitmap::nt {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q);

// Trial division; factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

// Least k >= 1 with a^k = 1 (mod q). Throws InvalidInput unless gcd(a, q) == 1.
// multiplicative_order(a, 1) == 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t q);

// Smallest generator of (Z/pZ)^*; p must be prime.
std::uint64_t primitive_root(std::uint64_t p);

// x in [0, q) with a x = 1 (mod q). Throws InvalidInput unless gcd(a, q) == 1.
std::uint64_t modular_inverse(std::int64_t a, std::uint64_t q);

bool is_prime(std::uint64_t n);

}  // namespace digitmap::nt
