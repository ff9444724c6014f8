#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "digitmap/bigint.hpp"
#include "digitmap/digit_map.hpp"
#include "digitmap/sparse_number.hpp"

namespace digitmap {

/// Cycle index used for integers whose orbit reaches 0 (possible when some
/// nonzero digit maps to 0). 0 is not a positive cycle number.
inline constexpr std::int32_t kReachesZero = -1;

/// Where an integer ends up and how it gets there, relative to a chosen
/// cycle element u.
struct Classification {
    std::int32_t cycle_index = kReachesZero;
    /// Smallest r >= 0 with f^r(n) in D (or f^r(n) == 0 for kReachesZero).
    std::uint64_t entry_steps = 0;
    bool is_u_integer = false;
    /// Smallest r >= 1 with f^r(n) == u; meaningful only when is_u_integer.
    std::uint64_t steps_to_u = 0;
    /// steps_to_u mod cycle_length.
    std::uint64_t phase = 0;
    std::uint64_t cycle_length = 0;
};

/// All cycles of a digit map, with a per-integer entry table over [1, T].
/// Immutable after construction; safe to share across threads.
class CycleAtlas {
public:
    /// Refuses maps whose threshold exceeds this (the entry table is O(T)).
    static constexpr std::uint64_t kDefaultMaxThreshold = 50'000'000;

    explicit CycleAtlas(DigitMap map, std::uint64_t max_threshold = kDefaultMaxThreshold);

    const DigitMap& map() const { return map_; }
    std::uint64_t threshold() const { return threshold_; }
    /// Cycles sorted by minimum element, each listed from its minimum.
    const std::vector<std::vector<std::uint64_t>>& cycles() const { return cycles_; }
    /// D, ascending.
    const std::vector<std::uint64_t>& attractor() const { return attractor_; }
    bool in_attractor(std::uint64_t n) const { return position_.contains(n); }
    bool in_attractor(const BigInt& n) const { return fits_u64(n) && in_attractor(static_cast<std::uint64_t>(n)); }

    /// Cycle index of u; throws InvalidInput when u is not a cycle number.
    std::size_t cycle_of(std::uint64_t u) const;
    std::uint64_t cycle_length_of(std::uint64_t u) const { return cycles_[cycle_of(u)].size(); }
    /// The element of u's cycle whose phase relative to u equals `phase`.
    std::uint64_t element_with_phase(std::uint64_t u, std::uint64_t phase) const;

    Classification classify(std::uint64_t n, std::uint64_t u) const;
    Classification classify(const BigInt& n, std::uint64_t u) const;
    Classification classify(const SparseNumber& n, std::uint64_t u) const;

    /// Cycle index reached from n (kReachesZero when the orbit hits 0).
    std::int32_t cycle_index(std::uint64_t n) const;

    template <typename A, typename B>
    bool are_concurrent(const A& m, const B& n, std::uint64_t u) const {
        const auto cm = classify(m, u);
        const auto cn = classify(n, u);
        return cm.is_u_integer && cn.is_u_integer && cm.phase == cn.phase;
    }

private:
    struct Entry {
        std::int32_t cycle = kReachesZero;
        std::uint32_t steps = 0;
        std::uint32_t position = 0;  // index of the entry point within its cycle
    };

    Classification from_entry(const Entry& entry, std::uint64_t extra_steps, std::uint64_t u) const;
    void build();

    DigitMap map_;
    std::uint64_t threshold_;
    std::vector<std::vector<std::uint64_t>> cycles_;
    std::vector<std::uint64_t> attractor_;
    std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>> position_;
    std::vector<Entry> table_;  // indexed by n in [0, T]
};

}  // namespace digitmap
