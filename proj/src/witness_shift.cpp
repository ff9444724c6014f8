#include "digitmap/errors.hpp"
#include "witness_internal.hpp"

namespace digitmap {

WitnessTrace shift_witness(const CycleAtlas& atlas, const BigInt& x, const BigInt& m,
                           std::uint64_t r, const WitnessOptions& options) {
    if (x < 1 || m < 1 || r < 1) throw InvalidInput("shift witness needs x, m, r >= 1");
    const DigitMap& map = atlas.map();
    detail::require_premises(map);

    WitnessTrace trace;
    trace.statement = Statement::Shift;
    trace.strategy = options.strategy;
    ShiftDetail info{x, m, r, {}, {}, {}};

    if (options.strategy == Strategy::Search) {
        if (m > 1'000'000) throw InvalidInput("search shift witness needs m <= 10^6");
        const auto bound = static_cast<std::uint64_t>(m);
        std::vector<BigInt> targets(bound + 1);
        for (std::uint64_t y = 1; y <= bound; ++y) targets[y] = x + map.iterate(BigInt(y), r);
        bool found = false;
        for (std::uint64_t l = 1; l <= options.search_budget && !found; ++l) {
            bool good = true;
            for (std::uint64_t y = 1; y <= bound && good; ++y) {
                good = map.iterate(BigInt(l + y), r) == targets[y];
            }
            if (good) {
                trace.output = BigInt(l);
                found = true;
            }
        }
        if (!found) throw BudgetExceeded("no shift witness within the search budget");
    } else {
        auto built = detail::build_shift(map, x, digit_count(m, map.base()), r, options);
        info.level_starts = std::move(built.level_starts);
        info.level_counts = std::move(built.level_counts);
        trace.output = std::move(built.l);
    }
    trace.detail = std::move(info);
    trace.verification = verify_witness(atlas, trace);
    return trace;
}

}  // namespace digitmap
