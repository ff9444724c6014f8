#include "digitmap/errors.hpp"
#include "digitmap/number_theory.hpp"
#include "witness_internal.hpp"

namespace digitmap {

namespace {

// l2 = sum_{n=1}^{ones} b^(n d) + m* sum_{i=1}^{r} b^((ones + i) d).
SparseNumber preimage_layer(std::uint32_t base, std::uint64_t order, const BigInt& ones,
                            const BigInt& r, std::uint32_t m_star) {
    const auto unit_run = SparseNumber::run(base, order, order, ones, 1);
    if (r == 0) return unit_run;
    return add_disjoint(unit_run,
                        SparseNumber::run(base, (ones + 1) * order, order, r, m_star));
}

}  // namespace

WitnessTrace congruent_u_preimage(const CycleAtlas& atlas, std::uint64_t u, const BigInt& a,
                                  const BigInt& h, const WitnessOptions& options) {
    const DigitMap& map = atlas.map();
    const auto constants = detail::require_premises(map);
    const std::uint64_t q = constants.modulus;
    const std::uint64_t cycle_length = atlas.cycle_length_of(u);
    const auto h_class = atlas.classify(h, u);
    if (!h_class.is_u_integer) throw InvalidInput("h = " + h.str() + " is not a u-integer");
    const std::uint64_t target_phase = h_class.phase;

    WitnessTrace trace;
    trace.statement = Statement::CongruentPreimage;
    trace.strategy = options.strategy;
    trace.u = u;
    PreimageDetail info;
    info.a = detail::mod_floor(a, q);
    info.h = h;
    info.modulus = q;
    info.m_star = constants.m_star;

    if (q == 1) {
        // Every integer is 0 mod 1; the cycle element in h's class will do.
        trace.output = BigInt(atlas.element_with_phase(u, target_phase));
        trace.notes.emplace_back("f(b-1) = 1: every residue condition is vacuous");
    } else if (options.strategy == Strategy::Search) {
        BigInt candidate = info.a == 0 ? BigInt(q) : info.a;
        bool found = false;
        for (std::uint64_t i = 0; i < options.search_budget; ++i, candidate += q) {
            const auto c = atlas.classify(candidate, u);
            if (c.is_u_integer && c.phase == target_phase) {
                found = true;
                break;
            }
        }
        if (!found) throw BudgetExceeded("no congruent u-integer within the search budget");
        trace.output = candidate;
    } else {
        const std::uint32_t base = map.base();
        const std::uint64_t order = nt::multiplicative_order(base % q, q);
        const BigInt bound = BigInt(q) * constants.m_star_value;
        const std::uint64_t seed = options.seed_element == SeedElement::PhaseAligned
                                       ? atlas.element_with_phase(u, target_phase + cycle_length - 1)
                                       : u;
        const std::uint64_t seed_phase = atlas.classify(seed, u).phase;
        BigInt l1 = seed;
        if (options.seed_scale == SeedScale::PowerOfBase) {
            // f(w b^(nd)) = f(w) and b^(nd) = 1 (mod q): same class, same residue.
            const BigInt step = ipow(base, order);
            while (l1 <= bound) l1 *= step;
        } else {
            l1 = bound + 1;
            std::uint64_t i = 0;
            for (;; ++l1, ++i) {
                if (i >= options.search_budget) throw BudgetExceeded("no seed above f(b-1) f(m*)");
                const auto c = atlas.classify(l1, u);
                if (c.is_u_integer && c.phase == seed_phase) break;
            }
        }
        // Solve l1 - r (f(m*) - m*) = a (mod q) with 0 <= r < q.
        const auto delta = static_cast<std::int64_t>(constants.m_star_value) -
                           static_cast<std::int64_t>(constants.m_star);
        const std::uint64_t inverse = nt::modular_inverse(delta, q);
        const BigInt r = detail::mod_floor((l1 - info.a) * inverse, q);
        const BigInt ones = l1 - r * constants.m_star_value;

        info.order = order;
        info.seed_element = seed;
        info.l1 = l1;
        info.r = r;
        info.ones = ones;

        // Each preimage level advances the phase by one.
        std::uint32_t depth = 2;
        if (options.seed_element == SeedElement::FromU) {
            const std::uint64_t gap = (target_phase + cycle_length - (seed_phase + 1) % cycle_length) % cycle_length;
            depth = 2 + static_cast<std::uint32_t>(gap);
        }
        info.chain_depth = depth;

        BigInt previous = l1;
        SparseNumber current = preimage_layer(base, order, ones, r, constants.m_star);
        std::uint32_t level = 2;
        std::vector<BigInt> level_r{r};
        // Deeper levels already carry residue a, so their congruence solution is r = 0.
        while (level < depth && current.densifiable(options.limit_digits)) {
            previous = current.to_dense(options.limit_digits);
            current = preimage_layer(base, order, previous, 0, constants.m_star);
            level_r.push_back(0);
            ++level;
        }
        if (level == depth) {
            trace.output = std::move(current);
        } else {
            DeepWitness deep;
            deep.base = base;
            deep.modulus = q;
            deep.order = order;
            deep.u = u;
            deep.level = depth;
            deep.concrete_level = level;
            deep.previous_value = previous;
            deep.concrete = std::move(current);
            deep.level_r = std::move(level_r);
            while (deep.level_r.size() < depth - 1) deep.level_r.emplace_back(0);
            deep.residue = static_cast<std::uint64_t>(info.a);
            deep.phase = target_phase;
            trace.output = std::move(deep);
            trace.notes.push_back("levels " + std::to_string(level + 1) + ".." +
                                  std::to_string(depth) + " are symbolic");
        }
    }
    trace.detail = std::move(info);
    trace.verification = verify_witness(atlas, trace);
    return trace;
}

}  // namespace digitmap
