#include "digitmap/number_theory.hpp"

#include <numeric>
#include <string>

#include "digitmap/errors.hpp"

namespace digitmap::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
    if (q == 1) return 0;
    std::uint64_t result = 1;
    a %= q;
    while (e != 0) {
        if (e & 1U) result = mulmod(result, a, q);
        a = mulmod(a, a, q);
        e >>= 1U;
    }
    return result;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n == 0) throw InvalidInput("factorize(0) is undefined");
    std::vector<PrimePower> factors;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        unsigned exponent = 0;
        while (n % p == 0) {
            n /= p;
            ++exponent;
        }
        factors.push_back({p, exponent});
    }
    if (n > 1) factors.push_back({n, 1});
    return factors;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = n;
    for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t q) {
    if (q == 0) throw InvalidInput("multiplicative order needs q >= 1");
    if (std::gcd(a, q) != 1) {
        throw InvalidInput("multiplicative order: gcd(" + std::to_string(a) + ", " +
                           std::to_string(q) + ") != 1");
    }
    if (q == 1) return 1;
    // The order divides phi(q); strip prime factors while the power stays 1.
    std::uint64_t order = euler_phi(q);
    for (const auto& [p, e] : factorize(order)) {
        for (unsigned i = 0; i < e && order % p == 0 && powmod(a, order / p, q) == 1; ++i) {
            order /= p;
        }
    }
    return order;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

std::uint64_t primitive_root(std::uint64_t p) {
    if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
    if (p == 2) return 1;
    for (std::uint64_t g = 2; g < p; ++g) {
        if (multiplicative_order(g, p) == p - 1) return g;
    }
    throw std::logic_error("no primitive root found");  // unreachable for primes
}

std::uint64_t modular_inverse(std::int64_t a, std::uint64_t q) {
    if (q == 0) throw InvalidInput("modular inverse needs q >= 1");
    const auto qs = static_cast<__int128>(q);
    __int128 value = static_cast<__int128>(a) % qs;
    if (value < 0) value += qs;
    if (std::gcd(static_cast<std::uint64_t>(value), q) != 1) {
        throw InvalidInput("modular inverse: " + std::to_string(a) + " is not a unit mod " +
                           std::to_string(q));
    }
    if (q == 1) return 0;
    __int128 r0 = qs, r1 = value, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const __int128 quotient = r0 / r1;
        r0 -= quotient * r1;
        std::swap(r0, r1);
        s0 -= quotient * s1;
        std::swap(s0, s1);
    }
    s0 %= qs;
    if (s0 < 0) s0 += qs;
    return static_cast<std::uint64_t>(s0);
}

}  // namespace digitmap::nt
