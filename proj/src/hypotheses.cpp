#include "digitmap/hypotheses.hpp"

#include <numeric>

#include "digitmap/bigint.hpp"
#include "digitmap/errors.hpp"

namespace digitmap {

PremiseReport check_premises(const DigitMap& map) {
    PremiseReport report;
    const std::uint32_t base = map.base();
    const std::uint64_t top = map.top_digit_value();
    report.top_value = top;
    report.f0_ok = map.digit_value(0) == 0;
    report.f1_ok = map.digit_value(1) == 1;
    report.gcd_b_ok = std::gcd(static_cast<std::uint64_t>(base), top) == 1;
    if (!report.f0_ok) report.failures.emplace_back("f*(0) != 0");
    if (!report.f1_ok) report.failures.emplace_back("f*(1) != 1");
    if (!report.gcd_b_ok) {
        report.failures.push_back("gcd(b, f(b-1)) = gcd(" + std::to_string(base) + ", " +
                                  std::to_string(top) + ") != 1");
    }
    for (std::uint32_t m = 0; m < base; ++m) {
        const std::uint64_t value = map.digit_value(m);
        const std::uint64_t diff = value >= m ? value - m : m - value;
        if (std::gcd(diff, top) == 1) report.m_star_candidates.push_back(m);
    }
    if (report.m_star_candidates.empty()) {
        report.failures.emplace_back("no digit m with gcd(f(m) - m, f(b-1)) = 1");
    }
    report.ok = report.f0_ok && report.f1_ok && report.gcd_b_ok && !report.m_star_candidates.empty();
    return report;
}

PanReport pan_condition(std::uint32_t exponent, std::uint32_t base) {
    if (base < 2) throw InvalidInput("base must be at least 2");
    if (exponent < 1) throw InvalidInput("exponent must be at least 1");
    PanReport report;
    for (const auto& [p, alpha] : nt::factorize(base - 1)) {
        const bool divides = (exponent - 1) % (p - 1) == 0;
        report.facts.push_back({p, p - 1, divides});
        if (divides) report.holds = false;
    }
    return report;
}

GCertificate construct_g(std::uint32_t exponent, std::uint32_t base) {
    const auto pan = pan_condition(exponent, base);
    if (!pan.holds) {
        throw PremiseFailure("pan condition fails for e=" + std::to_string(exponent) +
                             ", b=" + std::to_string(base));
    }
    GCertificate cert;
    const std::uint64_t modulus = base - 1;
    if (modulus == 1) {
        cert.valid = true;
        cert.gcd_with_top = 1;
        return cert;
    }
    std::uint64_t g = 0;
    for (const auto& factor : nt::factorize(modulus)) {
        const std::uint64_t p = factor.prime;
        std::uint64_t prime_power = 1;
        for (unsigned i = 0; i < factor.exponent; ++i) prime_power *= p;
        const std::uint64_t cofactor = modulus / prime_power;
        const std::uint64_t generator = nt::primitive_root(p);
        const std::uint64_t component =
            nt::mulmod(generator, nt::modular_inverse(static_cast<std::int64_t>(cofactor % p), p), p);
        g = (g + cofactor * component) % modulus;
        cert.steps.push_back({factor, cofactor, generator, component, false});
    }
    cert.g = static_cast<std::uint32_t>(g);

    const BigInt g_power = ipow(cert.g, exponent);
    bool all_nonfixed = true;
    for (auto& step : cert.steps) {
        const std::uint64_t p = step.factor.prime;
        step.nonfixed_mod_p = nt::powmod(cert.g, exponent, p) != cert.g % p;
        all_nonfixed = all_nonfixed && step.nonfixed_mod_p;
    }
    const BigInt diff = g_power >= cert.g ? BigInt(g_power - cert.g) : BigInt(cert.g - g_power);
    const BigInt top = ipow(base - 1, exponent);
    const BigInt common = boost::multiprecision::gcd(diff, top);
    cert.gcd_with_top = fits_u64(common) ? static_cast<std::uint64_t>(common)
                                         : std::numeric_limits<std::uint64_t>::max();
    cert.valid = all_nonfixed && cert.gcd_with_top == 1;
    return cert;
}

}  // namespace digitmap
