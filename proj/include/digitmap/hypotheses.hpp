#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "digitmap/digit_map.hpp"
#include "digitmap/number_theory.hpp"

namespace digitmap {

/// Outcome of checking the premises under which runs of consecutive u-integers exist.
struct PremiseReport {
    bool ok = false;
    bool f0_ok = false;      // f*(0) == 0
    bool f1_ok = false;      // f*(1) == 1
    bool gcd_b_ok = false;   // gcd(b, f(b-1)) == 1
    std::uint64_t top_value = 0;  // f(b-1)
    /// Digits m with gcd(|f*(m) - m|, f(b-1)) == 1, ascending. gcd(0, q) = q.
    std::vector<std::uint32_t> m_star_candidates;
    std::vector<std::string> failures;
};

PremiseReport check_premises(const DigitMap& map);

struct PanPrimeFact {
    std::uint64_t prime;
    std::uint64_t prime_minus_one;
    bool divides;  // (p - 1) | (e - 1)
};

/// For every prime p | b-1: (p-1) does not divide (e-1).
struct PanReport {
    bool holds = true;
    std::vector<PanPrimeFact> facts;
};

PanReport pan_condition(std::uint32_t exponent, std::uint32_t base);

struct GPrimeStep {
    nt::PrimePower factor;
    std::uint64_t cofactor;      // (b-1) / p^alpha
    std::uint64_t generator;     // smallest primitive root mod p
    std::uint64_t g_component;   // generator * cofactor^-1 mod p
    bool nonfixed_mod_p;         // g^e != g (mod p)
};

/// A digit g with gcd(f(g) - g, f(b-1)) = 1 under the power map m -> m^e,
/// built prime by prime from b - 1, together with the facts that certify it.
struct GCertificate {
    std::uint32_t g = 0;
    std::vector<GPrimeStep> steps;
    std::uint64_t gcd_with_top = 0;  // gcd(|g^e - g|, (b-1)^e)
    bool valid = false;
};

/// Throws PremiseFailure when pan_condition(e, b) fails. For b = 2 the
/// modulus f(b-1) is 1 and g = 0 is returned trivially.
GCertificate construct_g(std::uint32_t exponent, std::uint32_t base);

}  // namespace digitmap
