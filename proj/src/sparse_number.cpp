#include "digitmap/sparse_number.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "digitmap/errors.hpp"
#include "digitmap/number_theory.hpp"

namespace digitmap {

namespace {

// Splits a run at exponent `cut`: positions < cut go left, >= cut go right.
std::pair<DigitRun, DigitRun> split_run(const DigitRun& run, const BigInt& cut) {
    BigInt below = 0;
    if (run.start < cut) below = (cut - run.start + run.stride - 1) / run.stride;
    if (below > run.count) below = run.count;
    DigitRun left{run.start, run.stride, below, run.digit};
    DigitRun right{run.start + below * run.stride, run.stride, run.count - below, run.digit};
    return {left, right};
}

void push_nonempty(std::vector<DigitRun>& out, DigitRun run) {
    if (run.count > 0 && run.digit != 0) out.push_back(std::move(run));
}

struct Halves {
    std::vector<DigitRun> low;
    std::vector<DigitRun> high;
};

Halves split_at(const SparseNumber& s, const BigInt& cut) {
    Halves halves;
    for (const auto& run : s.runs()) {
        auto [left, right] = split_run(run, cut);
        push_nonempty(halves.low, std::move(left));
        push_nonempty(halves.high, std::move(right));
    }
    return halves;
}

// Removes the occurrence of a run at `exponent` (which must belong to the run)
// and returns the pieces strictly before and after it.
std::pair<DigitRun, DigitRun> cut_out(const DigitRun& run, const BigInt& exponent) {
    const BigInt index = (exponent - run.start) / run.stride;
    DigitRun before{run.start, run.stride, index, run.digit};
    DigitRun after{exponent + run.stride, run.stride, run.count - index - 1, run.digit};
    return {before, after};
}

}  // namespace

SparseNumber::SparseNumber(std::uint32_t base) : base_(base) {
    if (base_ < 2) throw InvalidInput("base must be at least 2");
}

SparseNumber::SparseNumber(std::uint32_t base, std::vector<DigitRun> runs)
    : base_(base), runs_(std::move(runs)) {
    if (base_ < 2) throw InvalidInput("base must be at least 2");
    normalize();
}

void SparseNumber::normalize() {
    std::vector<DigitRun> kept;
    kept.reserve(runs_.size());
    for (auto& run : runs_) {
        if (run.digit >= base_) throw InvalidInput("run digit out of range for base");
        if (run.count < 0 || run.start < 0) throw InvalidInput("negative run start or count");
        if (run.count == 0 || run.digit == 0) continue;
        if (run.count == 1) run.stride = 1;
        if (run.stride < 1) throw InvalidInput("run stride must be positive");
        kept.push_back(std::move(run));
    }
    std::sort(kept.begin(), kept.end(),
              [](const DigitRun& a, const DigitRun& b) { return a.start < b.start; });
    runs_.clear();
    for (auto& run : kept) {
        if (!runs_.empty()) {
            auto& prev = runs_.back();
            if (prev.last() >= run.start) {
                throw OverlapError("digit runs overlap at exponent " + run.start.str());
            }
            if (prev.stride == 1 && run.stride == 1 && prev.digit == run.digit &&
                prev.last() + 1 == run.start) {
                prev.count += run.count;
                continue;
            }
        }
        runs_.push_back(std::move(run));
    }
}

SparseNumber SparseNumber::from_dense(std::uint32_t base, const BigInt& n) {
    if (n < 0) throw InvalidInput("sparse numbers are non-negative");
    std::vector<DigitRun> runs;
    BigInt rest = n;
    std::uint64_t position = 0;
    const BigInt big_base = base;
    while (rest != 0) {
        BigInt quotient;
        BigInt remainder;
        boost::multiprecision::divide_qr(rest, big_base, quotient, remainder);
        const auto digit = static_cast<std::uint32_t>(remainder);
        if (digit != 0) {
            if (!runs.empty() && runs.back().digit == digit && runs.back().last() + 1 == position) {
                runs.back().count += 1;
            } else {
                runs.push_back({position, 1, 1, digit});
            }
        }
        rest = std::move(quotient);
        ++position;
    }
    return SparseNumber(base, std::move(runs));
}

SparseNumber SparseNumber::run(std::uint32_t base, BigInt start, BigInt stride, BigInt count,
                               std::uint32_t digit) {
    std::vector<DigitRun> runs;
    runs.push_back({std::move(start), std::move(stride), std::move(count), digit});
    return SparseNumber(base, std::move(runs));
}

BigInt SparseNumber::digit_length() const {
    if (runs_.empty()) return 0;
    return runs_.back().last() + 1;
}

std::uint32_t SparseNumber::digit_at(const BigInt& exponent) const {
    auto it = std::upper_bound(runs_.begin(), runs_.end(), exponent,
                               [](const BigInt& e, const DigitRun& r) { return e < r.start; });
    if (it == runs_.begin()) return 0;
    --it;
    if (exponent > it->last()) return 0;
    return (exponent - it->start) % it->stride == 0 ? it->digit : 0;
}

BigInt SparseNumber::to_dense(std::uint64_t limit_digits) const {
    const BigInt length = digit_length();
    if (length > limit_digits) {
        throw TooLarge("sparse number has " + length.str() + " digits, limit is " +
                       std::to_string(limit_digits));
    }
    BigInt value = 0;
    for (const auto& run : runs_) {
        const auto start = static_cast<std::uint64_t>(run.start);
        const auto stride = static_cast<std::uint64_t>(run.stride);
        const auto count = static_cast<std::uint64_t>(run.count);
        // digit * b^start * (b^(stride*count) - 1) / (b^stride - 1)
        const BigInt ratio = ipow(base_, stride);
        BigInt geometric = (ipow(base_, stride * count) - 1) / (ratio - 1);
        value += run.digit * ipow(base_, start) * geometric;
    }
    return value;
}

BigInt f_eval(const DigitMap& map, const SparseNumber& s) {
    if (s.base() != map.base()) throw InvalidInput("sparse number base differs from map base");
    BigInt sum = 0;
    for (const auto& run : s.runs()) sum += run.count * map.digit_value(run.digit);
    return sum;
}

std::uint64_t geom_sum_mod(std::uint64_t ratio, const BigInt& count, std::uint64_t q) {
    if (q == 0) throw InvalidInput("modulus must be positive");
    if (count < 0) throw InvalidInput("negative term count");
    if (q == 1 || count == 0) return 0;
    ratio %= q;
    // Invariant: sum = 1 + ratio + ... + ratio^(n-1), power = ratio^n.
    std::uint64_t sum = 0;
    std::uint64_t power = 1 % q;
    const auto top = static_cast<long>(boost::multiprecision::msb(count));
    for (long bit = top; bit >= 0; --bit) {
        sum = nt::mulmod(sum, (1 + power) % q, q);
        power = nt::mulmod(power, power, q);
        if (boost::multiprecision::bit_test(count, static_cast<unsigned>(bit))) {
            sum = (1 + nt::mulmod(ratio, sum, q)) % q;
            power = nt::mulmod(power, ratio, q);
        }
    }
    return sum;
}

std::uint64_t residue(const SparseNumber& s, std::uint64_t q) {
    if (q == 0) throw InvalidInput("modulus must be positive");
    if (std::gcd(static_cast<std::uint64_t>(s.base()), q) != 1) {
        throw InvalidInput("residue needs gcd(base, q) = 1; base " + std::to_string(s.base()) +
                           ", q " + std::to_string(q));
    }
    if (q == 1) return 0;
    const std::uint64_t order = nt::multiplicative_order(s.base() % q, q);
    const BigInt big_order = order;
    std::uint64_t total = 0;
    for (const auto& run : s.runs()) {
        const auto start = static_cast<std::uint64_t>(run.start % big_order);
        const auto stride = static_cast<std::uint64_t>(run.stride % big_order);
        const std::uint64_t lead = nt::powmod(s.base(), start, q);
        const std::uint64_t ratio = nt::powmod(s.base(), stride, q);
        std::uint64_t term = nt::mulmod(run.digit % q, lead, q);
        term = nt::mulmod(term, geom_sum_mod(ratio, run.count, q), q);
        total = (total + term) % q;
    }
    return total;
}

SparseNumber add_disjoint(const SparseNumber& s, const SparseNumber& t) {
    if (s.base() != t.base()) throw InvalidInput("cannot add sparse numbers of different bases");
    std::vector<DigitRun> runs = s.runs();
    runs.insert(runs.end(), t.runs().begin(), t.runs().end());
    return SparseNumber(s.base(), std::move(runs));
}

SparseNumber add_small(const SparseNumber& s, const BigInt& y) {
    if (y < 0) return sub_small(s, -y);
    if (y == 0) return s;
    const std::uint32_t base = s.base();
    const std::uint64_t window = digit_count(y, base);
    auto [low, high] = split_at(s, window);

    BigInt sum = SparseNumber(base, low).to_dense(window) + y;
    const BigInt window_power = ipow(base, window);
    const bool carry = sum >= window_power;
    if (carry) sum -= window_power;

    std::vector<DigitRun> result = SparseNumber::from_dense(base, sum).runs();
    if (carry) {
        BigInt position = window;
        std::size_t i = 0;
        for (;;) {
            while (i < high.size() && high[i].last() < position) {
                result.push_back(high[i]);
                ++i;
            }
            const bool occupied = i < high.size() && high[i].start <= position &&
                                  (position - high[i].start) % high[i].stride == 0;
            if (!occupied) {
                result.push_back({position, 1, 1, 1});
                break;
            }
            DigitRun current = high[i++];
            auto [before, after] = cut_out(current, position);
            push_nonempty(result, before);
            if (current.digit + 1 < base) {
                result.push_back({position, 1, 1, current.digit + 1});
                push_nonempty(result, after);
                break;
            }
            // Digit b-1 rolls over to 0. A stride-1 run of b-1 rolls over whole.
            if (current.stride == 1) {
                position = current.last() + 1;
            } else {
                position += 1;
                if (after.count > 0) high.insert(high.begin() + static_cast<std::ptrdiff_t>(i), after);
            }
        }
        for (; i < high.size(); ++i) result.push_back(high[i]);
    } else {
        result.insert(result.end(), high.begin(), high.end());
    }
    return SparseNumber(base, std::move(result));
}

SparseNumber sub_small(const SparseNumber& s, const BigInt& y) {
    if (y < 0) return add_small(s, -y);
    if (y == 0) return s;
    const std::uint32_t base = s.base();
    const std::uint64_t window = digit_count(y, base);
    auto [low, high] = split_at(s, window);

    BigInt low_value = SparseNumber(base, low).to_dense(window);
    std::vector<DigitRun> result;
    if (low_value >= y) {
        result = SparseNumber::from_dense(base, low_value - y).runs();
        result.insert(result.end(), high.begin(), high.end());
        return SparseNumber(base, std::move(result));
    }
    if (high.empty()) throw InvalidInput("sparse subtraction would go negative");
    result = SparseNumber::from_dense(base, low_value + ipow(base, window) - y).runs();
    // Borrow from the lowest nonzero digit at or above the window; the zeros
    // in between become b-1.
    const DigitRun lender = high.front();
    if (lender.start > window) result.push_back({window, 1, lender.start - window, base - 1});
    auto [before, after] = cut_out(lender, lender.start);
    push_nonempty(result, {lender.start, 1, 1, lender.digit - 1});
    push_nonempty(result, after);
    result.insert(result.end(), high.begin() + 1, high.end());
    return SparseNumber(base, std::move(result));
}

}  // namespace digitmap
