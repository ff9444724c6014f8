#include <algorithm>

#include "digitmap/errors.hpp"
#include "digitmap/hypotheses.hpp"
#include "witness_internal.hpp"

namespace digitmap {

const char* statement_tag(Statement s) {
    switch (s) {
        case Statement::Shift: return "L21";
        case Statement::CongruentPreimage: return "L23";
        case Statement::ConcurrentPair: return "C22";
        case Statement::ShiftAll: return "L22";
        case Statement::ConsecutiveRun: return "C21";
    }
    return "?";
}

const char* strategy_name(Strategy s) { return s == Strategy::Search ? "search" : "construct"; }

bool VerificationReport::ok() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::first_failure() const {
    for (const auto& c : checks) {
        if (!c.passed) return &c;
    }
    return nullptr;
}

SparseNumber as_sparse(std::uint32_t base, const Witness& w) {
    if (const auto* dense = std::get_if<BigInt>(&w)) return SparseNumber::from_dense(base, *dense);
    if (const auto* sparse = std::get_if<SparseNumber>(&w)) return *sparse;
    throw DepthExceeded("a symbolic preimage chain has no concrete sparse form");
}

std::optional<BigInt> as_dense(std::uint32_t base, const Witness& w, std::uint64_t limit_digits) {
    if (const auto* dense = std::get_if<BigInt>(&w)) return *dense;
    if (const auto* sparse = std::get_if<SparseNumber>(&w)) {
        (void)base;
        if (sparse->densifiable(limit_digits)) return sparse->to_dense(limit_digits);
    }
    return std::nullopt;
}

std::uint32_t choose_m_star(const DigitMap& map) {
    const auto report = check_premises(map);
    if (!report.ok) {
        std::string reason = report.failures.empty() ? "premises fail" : report.failures.front();
        throw PremiseFailure(reason);
    }
    return report.m_star_candidates.front();
}

namespace detail {

MapConstants require_premises(const DigitMap& map) {
    const std::uint32_t m_star = choose_m_star(map);
    return {map.top_digit_value(), m_star, map.digit_value(m_star)};
}

BigInt iterate_shifted(const DigitMap& map, const Witness& w, const BigInt& y, std::uint64_t r) {
    BigInt value;
    if (const auto* dense = std::get_if<BigInt>(&w)) {
        value = map.eval(BigInt(*dense + y));
    } else {
        value = f_eval(map, add_small(as_sparse(map.base(), w), y));
    }
    return map.iterate(std::move(value), r - 1);
}

Classification classify_shifted(const CycleAtlas& atlas, const Witness& w, const BigInt& y,
                                std::uint64_t u) {
    if (const auto* dense = std::get_if<BigInt>(&w)) return atlas.classify(BigInt(*dense + y), u);
    return atlas.classify(add_small(as_sparse(atlas.map().base(), w), y), u);
}

BigInt mod_floor(const BigInt& a, std::uint64_t q) {
    BigInt r = a % q;
    if (r < 0) r += q;
    return r;
}

ShiftBuild build_shift(const DigitMap& map, const BigInt& x, const BigInt& m_digits,
                       std::uint64_t r, const WitnessOptions& options) {
    if (r == 0) throw InvalidInput("shift witness needs r >= 1");
    if (r > options.depth_limit) {
        throw DepthExceeded("shift witness depth r=" + std::to_string(r) + " exceeds depth limit " +
                            std::to_string(options.depth_limit));
    }
    ShiftBuild out;
    BigInt count = x;
    if (r > 1) {
        // Every y <= m has f(y) <= digits(m) * max f*, so an inner witness for
        // that bound absorbs one more application of f.
        const BigInt inner_bound = m_digits * map.max_digit_value();
        auto inner = build_shift(map, x, digit_count(inner_bound, map.base()), r - 1, options);
        if (!inner.l.densifiable(options.limit_digits)) {
            throw DepthExceeded("shift witness level " + std::to_string(r) + " needs a run of " +
                                inner.l.digit_length().str() + "-digit length");
        }
        count = inner.l.to_dense(options.limit_digits);
        out.level_starts = std::move(inner.level_starts);
        out.level_counts = std::move(inner.level_counts);
    }
    out.level_starts.insert(out.level_starts.begin(), m_digits);
    out.level_counts.insert(out.level_counts.begin(), count);
    out.l = SparseNumber::run(map.base(), m_digits, 1, count, 1);
    return out;
}

BigInt require_dense(std::uint32_t base, const Witness& w, std::uint64_t limit_digits,
                     const std::string& what) {
    if (std::holds_alternative<DeepWitness>(w)) {
        throw DepthExceeded(what + " is only available as a symbolic preimage chain");
    }
    auto dense = as_dense(base, w, limit_digits);
    if (!dense) {
        throw DepthExceeded(what + " has " + std::get<SparseNumber>(w).digit_length().str() +
                            " digits, more than the limit of " + std::to_string(limit_digits));
    }
    return *dense;
}

std::string describe(const Witness& w) {
    if (const auto* dense = std::get_if<BigInt>(&w)) return dense->str();
    if (const auto* sparse = std::get_if<SparseNumber>(&w)) {
        return "sparse(" + std::to_string(sparse->runs().size()) + " runs, " +
               sparse->digit_length().str() + " digits)";
    }
    return "deep(level " + std::to_string(std::get<DeepWitness>(w).level) + ")";
}

}  // namespace detail
}  // namespace digitmap
