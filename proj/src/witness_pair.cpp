#include <algorithm>

#include "digitmap/errors.hpp"
#include "digitmap/number_theory.hpp"
#include "witness_internal.hpp"

namespace digitmap {

WitnessTrace concurrent_pair(const CycleAtlas& atlas, std::uint64_t u, const BigInt& x,
                             const WitnessOptions& options, const BigInt& min_l) {
    if (x < 1) throw InvalidInput("concurrent pair needs x >= 1");
    const DigitMap& map = atlas.map();
    const auto constants = detail::require_premises(map);
    const std::uint64_t q = constants.modulus;
    const std::uint32_t base = map.base();
    atlas.cycle_of(u);

    WitnessTrace trace;
    trace.statement = Statement::ConcurrentPair;
    trace.strategy = options.strategy;
    trace.u = u;
    PairDetail info;
    info.x = x;
    info.min_l = min_l;

    if (options.strategy == Strategy::Search) {
        BigInt l = std::max(min_l, BigInt(1));
        bool found = false;
        for (std::uint64_t i = 0; i < options.search_budget; ++i, ++l) {
            const auto first = atlas.classify(l, u);
            if (!first.is_u_integer) continue;
            const auto second = atlas.classify(BigInt(l + x), u);
            if (second.is_u_integer && second.phase == first.phase) {
                found = true;
                break;
            }
        }
        if (!found) throw BudgetExceeded("no concurrent pair within the search budget");
        trace.output = l;
        trace.detail = std::move(info);
        trace.verification = verify_witness(atlas, trace);
        return trace;
    }

    WitnessOptions sub = options;
    sub.strategy = options.sub_strategy;

    info.s = digit_count(x, base);
    info.x1 = ipow(base, static_cast<std::uint64_t>(info.s)) - x;
    info.f_x1 = map.eval(info.x1);

    // h' = f(x1) (mod q); which u-integer it must be concurrent with is free, use u.
    const auto h_prime_trace = congruent_u_preimage(atlas, u, info.f_x1, u, sub);
    info.h_prime = detail::require_dense(base, h_prime_trace.output, options.limit_digits, "h'");
    trace.notes.push_back("h' seeded from congruent preimage concurrent with u = " + std::to_string(u));

    const auto& cycle = atlas.cycles()[atlas.cycle_of(u)];
    for (std::uint64_t element : cycle) {
        const auto pre = congruent_u_preimage(atlas, u, 1, element, sub);
        BigInt value = detail::require_dense(base, pre.output, options.limit_digits,
                                             "l_v' for v' = " + std::to_string(element));
        info.big_m = std::max(info.big_m, value);
        info.cycle_preimages.emplace_back(element, std::move(value));
    }

    // v and N depend only on h's class, which boosting by b^phi(q) preserves.
    const auto h_class = atlas.classify(info.h_prime, u);
    info.v = atlas.element_with_phase(u, h_class.phase);
    for (const auto& [element, value] : info.cycle_preimages) {
        if (element == info.v) info.n = value;
    }
    const BigInt f_x2 = info.f_x1 + info.n - 1;
    const std::uint64_t min_k = digit_count(min_l, base);

    const BigInt boost = ipow(base, nt::euler_phi(q));
    info.h = info.h_prime;
    while (!(info.h > info.f_x1 + info.big_m) || (info.h - f_x2) / q < std::max<std::uint64_t>(min_k, 1)) {
        info.h *= boost;
        ++info.boost;
    }

    // b^t > b^(s + floor(h/q) + 1)
    info.t = info.s + info.h / q + 2;
    info.x2 = SparseNumber::from_dense(base, info.x1);
    if (info.n > 1) {
        info.x2 = add_disjoint(info.x2, SparseNumber::run(base, info.t + 1, 1, info.n - 1, 1));
    }
    info.f_x2 = f_eval(map, info.x2);
    info.k = (info.h - info.f_x2) / q;
    trace.output = add_disjoint(info.x2, SparseNumber::run(base, info.s, 1, info.k, base - 1));
    trace.detail = std::move(info);
    trace.verification = verify_witness(atlas, trace);
    return trace;
}

}  // namespace digitmap
