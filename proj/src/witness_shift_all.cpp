#include <algorithm>
#include <optional>

#include "digitmap/errors.hpp"
#include "witness_internal.hpp"

namespace digitmap {

namespace {

// Offsets h_x with h_x + u and h_x + x concurrently u-integers, manufactured
// from a concurrent pair (l, l + |x - u|).
Witness pivot_offset(const CycleAtlas& atlas, std::uint64_t u, std::uint64_t x,
                     const WitnessOptions& sub) {
    const std::uint32_t base = atlas.map().base();
    const std::uint64_t low = std::min(u, x);
    const std::uint64_t gap = std::max(u, x) - low;
    auto pair = concurrent_pair(atlas, u, gap, sub, BigInt(low) + 1);
    if (!pair.verification.ok()) throw std::logic_error("concurrent pair failed verification");
    if (const auto* dense = std::get_if<BigInt>(&pair.output)) return BigInt(*dense - low);
    return sub_small(as_sparse(base, pair.output), low);
}

constexpr std::uint64_t kDirectScan = 1'000'000;
constexpr std::uint64_t kGuidedOffsets = 1024;

std::optional<BigInt> direct_shift_search(const CycleAtlas& atlas, std::uint64_t u,
                                          std::uint64_t budget) {
    const auto& attractor = atlas.attractor();
    for (std::uint64_t h = 1; h <= budget; ++h) {
        const bool all = std::all_of(attractor.begin(), attractor.end(), [&](std::uint64_t x) {
            return atlas.classify(h + x, u).is_u_integer;
        });
        if (all) return BigInt(h);
    }
    return std::nullopt;
}

// With c + x < b^s for every x in D, h = k b^s + c gives f(h + x) = f(k) + f(c + x).
// Scan z = f(k) ascending and offsets c, then realize z with the largest digit
// value and ones.
std::optional<BigInt> guided_shift_search(const CycleAtlas& atlas, std::uint64_t u,
                                          std::uint64_t budget) {
    const DigitMap& map = atlas.map();
    const std::uint32_t base = map.base();
    const auto& attractor = atlas.attractor();
    const std::uint64_t top = attractor.back();
    const std::uint64_t s = digit_count(top + kGuidedOffsets, base);
    const BigInt block = ipow(base, s);

    std::vector<std::vector<std::uint64_t>> images(kGuidedOffsets);
    for (std::uint64_t c = 0; c < kGuidedOffsets; ++c) {
        for (auto x : attractor) images[c].push_back(map.eval(c + x));
    }
    std::uint64_t spent = 0;
    for (std::uint64_t z = 1; spent < budget; ++z) {
        for (std::uint64_t c = 0; c < kGuidedOffsets && spent < budget; ++c, ++spent) {
            const bool all = std::all_of(images[c].begin(), images[c].end(), [&](std::uint64_t w) {
                return atlas.classify(z + w, u).is_u_integer;
            });
            if (!all) continue;
            std::uint32_t top_digit = 1;
            for (std::uint32_t d = 1; d < base; ++d) {
                if (map.digit_value(d) > map.digit_value(top_digit)) top_digit = d;
            }
            const std::uint64_t top_value = map.digit_value(top_digit);
            const std::uint64_t full = z / top_value;
            const std::uint64_t ones = z % top_value;
            // k = (full copies of the top digit) followed by (ones) ones.
            BigInt k = 0;
            for (std::uint64_t i = 0; i < full; ++i) k = k * base + top_digit;
            for (std::uint64_t i = 0; i < ones; ++i) k = k * base + 1;
            return k * block + c;
        }
    }
    return std::nullopt;
}

class ShiftAllBuilder {
public:
    ShiftAllBuilder(const CycleAtlas& atlas, std::uint64_t u, const WitnessOptions& options)
        : atlas_(atlas), u_(u), options_(options) {
        sub_ = options;
        sub_.strategy = options.sub_strategy;
    }

    // h_X with h_X + y a u-integer for every y in X (u in X).
    Witness solve(const std::vector<std::uint64_t>& subset) {
        const DigitMap& map = atlas_.map();
        const std::uint32_t base = map.base();
        if (subset.size() == 1) {
            // u b is a u-integer larger than u.
            return SparseNumber::from_dense(base, BigInt(u_) * (base - 1));
        }
        ShiftAllStep step;
        step.subset = subset;
        step.pivot = *std::find_if(subset.begin(), subset.end(), [&](auto y) { return y != u_; });
        step.h_pivot = pivot_offset(atlas_, u_, step.pivot, sub_);
        if (subset.size() == 2) {
            step.lifted = step.h_pivot;
            steps_.push_back(step);
            return step.h_pivot;
        }

        // r: a common time at which h_x + u and h_x + x both sit at u and
        // every h_x + y has entered D.
        const auto at_u = detail::classify_shifted(atlas_, step.h_pivot, u_, u_);
        std::uint64_t entry = 0;
        for (auto y : subset) {
            entry = std::max(entry, detail::classify_shifted(atlas_, step.h_pivot, y, u_).entry_steps);
        }
        std::uint64_t r = at_u.steps_to_u;
        while (r < entry) r += at_u.cycle_length;
        step.r = r;

        BigInt m_digits = 0;
        for (auto y : subset) {
            const BigInt image = detail::iterate_shifted(map, step.h_pivot, y, r);
            if (!atlas_.in_attractor(image)) throw std::logic_error("f^r(h_x + y) left D");
            step.images.push_back(static_cast<std::uint64_t>(image));
            m_digits = std::max(m_digits, add_small(as_sparse(base, step.h_pivot), y).digit_length());
        }
        std::vector<std::uint64_t> reduced = step.images;
        std::sort(reduced.begin(), reduced.end());
        reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());

        const std::size_t index = steps_.size();
        steps_.push_back(step);
        const Witness inner = solve(reduced);
        const BigInt shift = detail::require_dense(base, inner, options_.limit_digits,
                                                   "inner shift h_X*");
        auto built = detail::build_shift(map, shift, m_digits, r, options_);
        Witness lifted = add_disjoint(built.l, as_sparse(base, step.h_pivot));
        steps_[index].lifted = lifted;
        return lifted;
    }

    std::vector<ShiftAllStep> steps() && { return std::move(steps_); }

private:
    const CycleAtlas& atlas_;
    std::uint64_t u_;
    WitnessOptions options_;
    WitnessOptions sub_;
    std::vector<ShiftAllStep> steps_;
};

}  // namespace

WitnessTrace shift_all_witness(const CycleAtlas& atlas, std::uint64_t u,
                               const WitnessOptions& options) {
    detail::require_premises(atlas.map());
    atlas.cycle_of(u);
    const auto& attractor = atlas.attractor();

    WitnessTrace trace;
    trace.statement = Statement::ShiftAll;
    trace.strategy = options.strategy;
    trace.u = u;

    if (options.strategy == Strategy::Search) {
        auto found = direct_shift_search(atlas, u, std::min(options.search_budget, kDirectScan));
        if (found) {
            trace.output = std::move(*found);
        } else {
            found = guided_shift_search(atlas, u, options.search_budget);
            if (!found) throw BudgetExceeded("no common shift within the search budget");
            trace.output = std::move(*found);
            trace.notes.emplace_back("found by digit-split search: h = k b^s + c with f(h + x) = f(k) + f(c + x)");
        }
        trace.detail = ShiftAllDetail{};
    } else {
        ShiftAllBuilder builder(atlas, u, options);
        trace.output = builder.solve(attractor);
        trace.detail = ShiftAllDetail{std::move(builder).steps()};
    }
    trace.verification = verify_witness(atlas, trace);
    return trace;
}

WitnessTrace consecutive_run(const CycleAtlas& atlas, std::uint64_t u, std::uint64_t n,
                             const WitnessOptions& options) {
    if (n < 1) throw InvalidInput("run length must be at least 1");
    const DigitMap& map = atlas.map();
    detail::require_premises(map);
    atlas.cycle_of(u);

    WitnessTrace trace;
    trace.statement = Statement::ConsecutiveRun;
    trace.strategy = options.strategy;
    trace.u = u;
    RunDetail info;
    info.n = n;

    if (options.strategy == Strategy::Search) {
        // Smallest l >= 1 with l+1..l+n all u-integers.
        std::uint64_t length = 0;
        bool found = false;
        for (std::uint64_t y = 2; y <= options.search_budget + n + 1; ++y) {
            length = atlas.classify(y, u).is_u_integer ? length + 1 : 0;
            if (length >= n) {
                trace.output = BigInt(y - n);
                found = true;
                break;
            }
        }
        if (!found) throw BudgetExceeded("no run of " + std::to_string(n) + " within the search budget");
    } else {
        WitnessOptions sub = options;
        sub.strategy = options.sub_strategy;
        auto shift_all = shift_all_witness(atlas, u, sub);
        info.h = shift_all.output;
        const BigInt h = detail::require_dense(map.base(), info.h, options.limit_digits, "shift h");
        std::uint64_t r = 1;
        for (std::uint64_t y = 1; y <= n; ++y) {
            r = std::max(r, atlas.classify(y, u).entry_steps);
        }
        info.r = r;
        // f^r(l + y) = h + f^r(y), and f^r(y) lies in D.
        auto built = detail::build_shift(map, h, digit_count(BigInt(n), map.base()), r, options);
        trace.output = std::move(built.l);
    }
    trace.detail = std::move(info);
    trace.verification = verify_witness(atlas, trace);
    return trace;
}

}  // namespace digitmap
