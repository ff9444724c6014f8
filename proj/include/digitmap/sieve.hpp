#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "digitmap/atlas.hpp"

namespace digitmap {

/// A maximal run of consecutive u-integers. `clipped` marks runs that touch the
/// end of the scanned range, whose maximality could not be confirmed.
struct RunRecord {
    std::uint64_t u = 0;
    std::uint64_t start = 0;
    std::uint64_t length = 0;
    bool clipped = false;
    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Brute-force range classifier. Holds a cycle-index table over [1, cap];
/// above T a single f-step lands in lower territory, so the table is filled
/// bottom-up and larger integers need only a few steps to reach it.
class Sieve {
public:
    static constexpr std::uint64_t kDefaultMemoCap = 1'000'000;

    explicit Sieve(const CycleAtlas& atlas, std::uint64_t memo_cap = kDefaultMemoCap);

    std::int32_t classify(std::uint64_t n) const;

    /// Cycle index of every n in [lo, hi], split across `threads` workers.
    std::vector<std::int32_t> classify_range(std::uint64_t lo, std::uint64_t hi,
                                             unsigned threads = 1) const;

    /// All maximal runs of u-integers inside [1, bound] with length >= min_len.
    std::vector<RunRecord> find_runs(std::uint64_t u, std::uint64_t bound, std::uint64_t min_len,
                                     unsigned threads = 1) const;

    /// First run of length >= m among [1, budget]; nullopt when none is found.
    std::optional<RunRecord> first_run_of_length(std::uint64_t u, std::uint64_t m,
                                                 std::uint64_t budget, unsigned threads = 1) const;

    const CycleAtlas& atlas() const { return atlas_; }

private:
    const CycleAtlas& atlas_;
    std::vector<std::int32_t> memo_;
};

/// Worker count from DIGITMAP_THREADS, defaulting to 1.
unsigned threads_from_env();

}  // namespace digitmap
