#pragma once

#include <cstdint>
#include <vector>

#include "digitmap/bigint.hpp"
#include "digitmap/digit_map.hpp"

namespace digitmap {

/// `count` copies of `digit` at exponents start, start + stride, ...
struct DigitRun {
    BigInt start;
    BigInt stride;
    BigInt count;
    std::uint32_t digit = 0;

    BigInt last() const { return start + (count - 1) * stride; }

    friend bool operator==(const DigitRun&, const DigitRun&) = default;
};

/// A non-negative integer stored as arithmetic-progression runs of equal
/// nonzero digits. Exponents and counts are unbounded, so values with
/// astronomically many digits are representable as long as they have few runs.
///
/// Invariants: runs sorted by start; the closed interval [start, last] of each
/// run ends before the next run starts; no zero digits; empty list is 0.
/// Runs are kept canonical: count-1 runs have stride 1, and adjacent stride-1
/// runs of the same digit are fused.
class SparseNumber {
public:
    explicit SparseNumber(std::uint32_t base = 10);
    /// Validates and normalizes; throws OverlapError/InvalidInput.
    SparseNumber(std::uint32_t base, std::vector<DigitRun> runs);

    static SparseNumber from_dense(std::uint32_t base, const BigInt& n);
    /// A single run; count 0 yields zero.
    static SparseNumber run(std::uint32_t base, BigInt start, BigInt stride, BigInt count,
                            std::uint32_t digit);

    std::uint32_t base() const { return base_; }
    const std::vector<DigitRun>& runs() const { return runs_; }
    bool is_zero() const { return runs_.empty(); }
    /// Number of digits, i.e. highest exponent + 1 (0 for zero).
    BigInt digit_length() const;
    std::uint32_t digit_at(const BigInt& exponent) const;

    /// Dense value; throws TooLarge when digit_length() > limit_digits.
    BigInt to_dense(std::uint64_t limit_digits) const;
    bool densifiable(std::uint64_t limit_digits) const { return digit_length() <= limit_digits; }

    friend bool operator==(const SparseNumber&, const SparseNumber&) = default;

private:
    void normalize();
    std::uint32_t base_;
    std::vector<DigitRun> runs_;
};

/// f of a sparse number: sum of count * f*(digit).
BigInt f_eval(const DigitMap& map, const SparseNumber& s);

/// (1 + ratio + ... + ratio^(count-1)) mod q by binary doubling over count.
std::uint64_t geom_sum_mod(std::uint64_t ratio, const BigInt& count, std::uint64_t q);

/// s mod q. Requires gcd(base, q) == 1 so exponents reduce mod ord_q(base).
std::uint64_t residue(const SparseNumber& s, std::uint64_t q);

/// Sum of two numbers with interval-disjoint digits; no carries can occur.
SparseNumber add_disjoint(const SparseNumber& s, const SparseNumber& t);

/// s + y and s - y for a comparatively small dense y. Carries and borrows
/// propagate through runs symbolically, so a run of 10^100 digits b-1 costs
/// the same as a single digit.
SparseNumber add_small(const SparseNumber& s, const BigInt& y);
SparseNumber sub_small(const SparseNumber& s, const BigInt& y);

}  // namespace digitmap
