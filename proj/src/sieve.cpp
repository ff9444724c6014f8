#include "digitmap/sieve.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "digitmap/errors.hpp"

namespace digitmap {

namespace {
constexpr std::uint64_t kChunk = 1U << 18;
}

Sieve::Sieve(const CycleAtlas& atlas, std::uint64_t memo_cap) : atlas_(atlas) {
    const std::uint64_t top = std::max(atlas.threshold(), memo_cap);
    memo_.assign(top + 1, kReachesZero);
    const DigitMap& map = atlas.map();
    for (std::uint64_t n = 1; n <= top; ++n) {
        // f(n) < n beyond T, so the image is already filled in.
        memo_[n] = n <= atlas.threshold() ? atlas.cycle_index(n) : memo_[map.eval(n)];
    }
}

std::int32_t Sieve::classify(std::uint64_t n) const {
    const std::uint64_t top = memo_.size() - 1;
    while (n > top) n = atlas_.map().eval(n);
    return memo_[n];
}

std::vector<std::int32_t> Sieve::classify_range(std::uint64_t lo, std::uint64_t hi,
                                                unsigned threads) const {
    if (lo < 1 || lo > hi) throw InvalidInput("classify_range needs 1 <= lo <= hi");
    const std::uint64_t size = hi - lo + 1;
    std::vector<std::int32_t> out(size);
    threads = std::max(1U, threads);
    const std::uint64_t per = (size + threads - 1) / threads;
    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) out[i] = classify(lo + i);
    };
    if (threads == 1 || size < 4096) {
        work(0, size);
        return out;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t begin = std::min(size, t * per);
        const std::uint64_t end = std::min(size, begin + per);
        if (begin < end) pool.emplace_back(work, begin, end);
    }
    return out;
}

std::vector<RunRecord> Sieve::find_runs(std::uint64_t u, std::uint64_t bound, std::uint64_t min_len,
                                        unsigned threads) const {
    if (bound < 1) throw InvalidInput("bound must be at least 1");
    const auto target = static_cast<std::int32_t>(atlas_.cycle_of(u));
    std::vector<RunRecord> runs;
    std::uint64_t run_start = 0;
    std::uint64_t run_length = 0;
    auto close = [&](bool clipped) {
        if (run_length >= std::max<std::uint64_t>(min_len, 1)) {
            runs.push_back({u, run_start, run_length, clipped});
        }
        run_length = 0;
    };
    for (std::uint64_t lo = 1; lo <= bound; lo += kChunk) {
        const std::uint64_t hi = std::min(bound, lo + kChunk - 1);
        const auto cycles = classify_range(lo, hi, threads);
        for (std::uint64_t i = 0; i < cycles.size(); ++i) {
            if (cycles[i] == target) {
                if (run_length == 0) run_start = lo + i;
                ++run_length;
            } else if (run_length > 0) {
                close(false);
            }
        }
        if (hi == bound) break;
    }
    if (run_length > 0) close(true);
    return runs;
}

std::optional<RunRecord> Sieve::first_run_of_length(std::uint64_t u, std::uint64_t m,
                                                    std::uint64_t budget, unsigned threads) const {
    if (m < 1) throw InvalidInput("run length must be at least 1");
    const auto target = static_cast<std::int32_t>(atlas_.cycle_of(u));
    std::uint64_t run_start = 0;
    std::uint64_t run_length = 0;
    for (std::uint64_t lo = 1; lo <= budget; lo += kChunk) {
        const std::uint64_t hi = std::min(budget, lo + kChunk - 1);
        const auto cycles = classify_range(lo, hi, threads);
        for (std::uint64_t i = 0; i < cycles.size(); ++i) {
            if (cycles[i] != target) {
                run_length = 0;
                continue;
            }
            if (run_length == 0) run_start = lo + i;
            if (++run_length >= m) {
                // Extend to the end of the run so the record is maximal.
                std::uint64_t end = lo + i + 1;
                while (end <= budget && classify(end) == target) ++end;
                return RunRecord{u, run_start, end - run_start, end > budget};
            }
        }
        if (hi == budget) break;
    }
    return std::nullopt;
}

unsigned threads_from_env() {
    if (const char* env = std::getenv("DIGITMAP_THREADS")) {
        const long value = std::strtol(env, nullptr, 10);
        if (value >= 1 && value <= 1024) return static_cast<unsigned>(value);
    }
    return 1;
}

}  // namespace digitmap
