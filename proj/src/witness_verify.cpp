#include <algorithm>
#include <numeric>

#include "digitmap/errors.hpp"
#include "digitmap/hypotheses.hpp"
#include "digitmap/number_theory.hpp"
#include "witness_internal.hpp"

namespace digitmap {

namespace {

class Checker {
public:
    explicit Checker(VerificationReport& report) : report_(report) {}

    bool operator()(std::string name, bool passed, std::string detail = {}) {
        report_.checks.push_back({std::move(name), passed, std::move(detail)});
        return passed;
    }

private:
    VerificationReport& report_;
};

std::uint64_t residue_of(const Witness& w, std::uint64_t q) {
    if (const auto* dense = std::get_if<BigInt>(&w)) {
        return static_cast<std::uint64_t>(detail::mod_floor(*dense, q));
    }
    return residue(std::get<SparseNumber>(w), q);
}

Classification classify_witness(const CycleAtlas& atlas, const Witness& w, std::uint64_t u) {
    return detail::classify_shifted(atlas, w, 0, u);
}

void verify_shift(const CycleAtlas& atlas, const WitnessTrace& trace, const ShiftDetail& info,
                  Checker& check) {
    const DigitMap& map = atlas.map();
    check("f^r(l) = x", detail::iterate_shifted(map, trace.output, 0, info.r) == info.x);
    std::vector<BigInt> offsets = info.offsets;
    if (offsets.empty()) {
        if (info.m > 10'000'000) {
            check("exhaustive range", false, "m too large to replay exhaustively");
            return;
        }
        for (BigInt y = 1; y <= info.m; ++y) offsets.push_back(y);
    }
    std::string failure;
    for (const auto& y : offsets) {
        const BigInt lhs = detail::iterate_shifted(map, trace.output, y, info.r);
        const BigInt rhs = info.x + map.iterate(y, info.r);
        if (lhs != rhs) {
            failure = "y = " + y.str() + ": " + lhs.str() + " != " + rhs.str();
            break;
        }
    }
    check("f^r(l + y) = x + f^r(y) for every y", failure.empty(), failure);
    if (trace.strategy == Strategy::Construct && !info.level_counts.empty()) {
        check("outermost run count recorded", std::get<SparseNumber>(trace.output).runs().size() == 1 &&
                  std::get<SparseNumber>(trace.output).runs().front().count == info.level_counts.front());
    }
}

void verify_deep(const CycleAtlas& atlas, const DeepWitness& deep, const PreimageDetail& info,
                 std::uint64_t target_phase, Checker& check) {
    const DigitMap& map = atlas.map();
    const std::uint64_t c = atlas.cycle_length_of(deep.u);
    check("f(l_j) = l_(j-1) at the deepest concrete level", f_eval(map, deep.concrete) == deep.previous_value);
    const std::uint64_t concrete_residue = residue(deep.concrete, deep.modulus);
    check("concrete level residue = a", concrete_residue == info.a);
    const auto previous = atlas.classify(deep.previous_value, deep.u);
    const auto concrete = atlas.classify(deep.concrete, deep.u);
    check("concrete level is a u-integer", concrete.is_u_integer);
    check("preimage advances the phase by one", concrete.phase == (previous.phase + 1) % c);
    // Symbolic levels are runs of value(l_(j-1)) ones at stride d with r = 0:
    // each keeps the residue and advances the phase by one.
    bool symbolic_r = deep.level_r.size() + 1 == deep.level;
    for (std::size_t j = deep.concrete_level - 1; j < deep.level_r.size(); ++j) {
        symbolic_r = symbolic_r && deep.level_r[j] == 0;
    }
    check("symbolic levels use r = 0", symbolic_r);
    check("declared residue matches the chain", deep.residue == concrete_residue,
          "declared " + std::to_string(deep.residue) + ", chain " + std::to_string(concrete_residue));
    const std::uint64_t chain_phase = (concrete.phase + deep.level - deep.concrete_level) % c;
    check("declared phase matches the chain", deep.phase == chain_phase);
    check("chain phase matches h", chain_phase == target_phase);
}

void verify_preimage(const CycleAtlas& atlas, const WitnessTrace& trace, const PreimageDetail& info,
                     Checker& check) {
    const DigitMap& map = atlas.map();
    const std::uint64_t q = map.top_digit_value();
    const auto h_class = atlas.classify(info.h, trace.u);
    check("h is a u-integer", h_class.is_u_integer);
    check("a reduced mod f(b-1)", info.modulus == q && info.a >= 0 && info.a < q);

    if (const auto* deep = std::get_if<DeepWitness>(&trace.output)) {
        verify_deep(atlas, *deep, info, h_class.phase, check);
    } else {
        const auto l_class = classify_witness(atlas, trace.output, trace.u);
        check("l is a u-integer", l_class.is_u_integer);
        check("l = a (mod f(b-1))", residue_of(trace.output, q) == info.a);
        check("l and h are concurrently u-integers",
              l_class.is_u_integer && h_class.is_u_integer && l_class.phase == h_class.phase);
    }
    if (trace.strategy != Strategy::Construct || q == 1) return;

    const std::uint64_t fm = map.digit_value(info.m_star);
    check("m* is admissible",
          std::gcd(fm >= info.m_star ? fm - info.m_star : info.m_star - fm, q) == 1);
    check("d = ord(b) mod f(b-1)", info.order == nt::multiplicative_order(map.base() % q, q));
    const auto seed_class = atlas.classify(info.l1, trace.u);
    check("l1 is a u-integer", seed_class.is_u_integer);
    check("l1 > f(b-1) f(m*)", info.l1 > BigInt(q) * fm);
    check("0 <= r < f(b-1)", info.r >= 0 && info.r < q);
    const auto delta = static_cast<std::int64_t>(fm) - static_cast<std::int64_t>(info.m_star);
    check("l1 - r (f(m*) - m*) = a (mod f(b-1))",
          detail::mod_floor(info.l1 - info.r * delta - info.a, q) == 0);
    check("l1 - r f(m*) >= 1", info.ones == info.l1 - info.r * fm && info.ones >= 1);
    SparseNumber l2 = SparseNumber::run(map.base(), info.order, info.order, info.ones, 1);
    if (info.r > 0) {
        l2 = add_disjoint(l2, SparseNumber::run(map.base(), (info.ones + 1) * info.order, info.order,
                                                info.r, info.m_star));
    }
    check("f(l2) = l1", f_eval(map, l2) == info.l1);
    check("l2 = a (mod f(b-1))", residue(l2, q) == info.a);
    if (info.chain_depth == 2) {
        check("output is the rebuilt l2", std::holds_alternative<SparseNumber>(trace.output) &&
                                              std::get<SparseNumber>(trace.output) == l2);
    }
}

void verify_pair(const CycleAtlas& atlas, const WitnessTrace& trace, const PairDetail& info,
                 Checker& check) {
    const DigitMap& map = atlas.map();
    const std::uint32_t base = map.base();
    const std::uint64_t u = trace.u;
    const std::uint64_t q = map.top_digit_value();

    const auto l_class = classify_witness(atlas, trace.output, u);
    const auto shifted = detail::classify_shifted(atlas, trace.output, info.x, u);
    check("l is a u-integer", l_class.is_u_integer);
    check("l + x is a u-integer", shifted.is_u_integer);
    check("l and l + x are concurrently u-integers",
          l_class.is_u_integer && shifted.is_u_integer && l_class.phase == shifted.phase);
    const SparseNumber l_sparse = as_sparse(base, trace.output);
    check("l >= min_l", l_sparse.digit_length() > 64 || l_sparse.to_dense(64) >= info.min_l);
    if (trace.strategy != Strategy::Construct) return;

    const auto s = static_cast<std::uint64_t>(info.s);
    check("b^s > x >= b^(s-1)", ipow(base, s) > info.x && ipow(base, s - 1) <= info.x);
    check("x1 = b^s - x", info.x1 == ipow(base, s) - info.x);
    check("f(x1) recorded", info.f_x1 == map.eval(info.x1));
    const auto h_prime_class = atlas.classify(info.h_prime, u);
    check("h' is a u-integer", h_prime_class.is_u_integer);
    check("h' = f(x1) (mod f(b-1))", detail::mod_floor(info.h_prime - info.f_x1, q) == 0);

    const auto& cycle = atlas.cycles()[atlas.cycle_of(u)];
    bool preimages_ok = info.cycle_preimages.size() == cycle.size();
    BigInt max_preimage = 0;
    for (const auto& [element, value] : info.cycle_preimages) {
        preimages_ok = preimages_ok && std::find(cycle.begin(), cycle.end(), element) != cycle.end() &&
                       detail::mod_floor(value, q) == 1 % q &&
                       atlas.are_concurrent(value, BigInt(element), u);
        max_preimage = std::max(max_preimage, value);
    }
    check("l_v' = 1 (mod f(b-1)) and concurrent with v' for every v' in V", preimages_ok);
    check("M = max l_v'", info.big_m == max_preimage);
    check("h = h' b^(j phi(f(b-1)))",
          info.h == info.h_prime * ipow(base, info.boost * nt::euler_phi(q)));
    check("h > f(x1) + M", info.h > info.f_x1 + info.big_m);
    check("h is a u-integer with h = h' (mod f(b-1))",
          atlas.classify(info.h, u).is_u_integer && detail::mod_floor(info.h - info.h_prime, q) == 0);
    check("h and v are concurrently u-integers", atlas.are_concurrent(info.h, BigInt(info.v), u));
    bool n_ok = false;
    for (const auto& [element, value] : info.cycle_preimages) {
        if (element == info.v) n_ok = value == info.n;
    }
    check("N = l_v", n_ok);
    check("b^t > b^(s + floor(h / f(b-1)) + 1)", info.t > info.s + info.h / q + 1);

    SparseNumber x2 = SparseNumber::from_dense(base, info.x1);
    if (info.n > 1) x2 = add_disjoint(x2, SparseNumber::run(base, info.t + 1, 1, info.n - 1, 1));
    check("x2 = x1 + b^t sum_{j=1}^{N-1} b^j", x2 == info.x2);
    const BigInt f_x2 = f_eval(map, x2);
    check("f(x2) = f(x1) + (N - 1)", f_x2 == info.f_x1 + info.n - 1 && f_x2 == info.f_x2);
    check("f(x2) = f(x1) (mod f(b-1))", detail::mod_floor(f_x2 - info.f_x1, q) == 0);
    check("f(x2) < h", f_x2 < info.h);
    check("h = f(b-1) k + f(x2)", info.h == BigInt(q) * info.k + f_x2);
    check("k >= 1", info.k >= 1);
    check("k < t - s", info.k < info.t - info.s);

    const SparseNumber l = add_disjoint(x2, SparseNumber::run(base, info.s, 1, info.k, base - 1));
    check("output is x2 + sum (b-1) b^(s+j)", l == l_sparse);
    const BigInt f_l = f_eval(map, l);
    check("f(l) = h", f_l == info.h, f_l == info.h ? "" : "f(l) = " + f_l.str());
    const BigInt f_lx = f_eval(map, add_small(l, info.x));
    check("f(l + x) = N", f_lx == info.n);
}

void verify_shift_all(const CycleAtlas& atlas, const WitnessTrace& trace, const ShiftAllDetail& info,
                      Checker& check) {
    const std::uint64_t u = trace.u;
    std::string failure;
    for (std::uint64_t x : atlas.attractor()) {
        if (!detail::classify_shifted(atlas, trace.output, x, u).is_u_integer) {
            failure = "h + " + std::to_string(x) + " is not a u-integer";
            break;
        }
    }
    check("h + x is a u-integer for every x in D", failure.empty(), failure);
    const DigitMap& map = atlas.map();
    for (const auto& step : info.steps) {
        const std::string where = "|X| = " + std::to_string(step.subset.size());
        check(where + ": h_x + u and h_x + x concurrently u-integers",
              [&] {
                  const auto a = detail::classify_shifted(atlas, step.h_pivot, u, u);
                  const auto b = detail::classify_shifted(atlas, step.h_pivot, step.pivot, u);
                  return a.is_u_integer && b.is_u_integer && a.phase == b.phase;
              }());
        if (step.r == 0) continue;
        bool images_ok = step.images.size() == step.subset.size();
        for (std::size_t i = 0; images_ok && i < step.subset.size(); ++i) {
            images_ok = detail::iterate_shifted(map, step.h_pivot, step.subset[i], step.r) == step.images[i];
            images_ok = images_ok && atlas.in_attractor(step.images[i]);
        }
        check(where + ": f^r(h_x + y) lies in D", images_ok);
        bool lifted_ok = true;
        for (auto y : step.subset) {
            lifted_ok = lifted_ok && detail::classify_shifted(atlas, step.lifted, y, u).is_u_integer;
        }
        check(where + ": h_X + y is a u-integer for every y in X", lifted_ok);
    }
}

void verify_run(const CycleAtlas& atlas, const WitnessTrace& trace, const RunDetail& info,
                Checker& check) {
    const std::uint64_t u = trace.u;
    std::string failure;
    for (std::uint64_t y = 1; y <= info.n; ++y) {
        if (!detail::classify_shifted(atlas, trace.output, y, u).is_u_integer) {
            failure = "l + " + std::to_string(y) + " is not a u-integer";
            break;
        }
    }
    check("l + y is a u-integer for 1 <= y <= n", failure.empty(), failure);
    if (trace.strategy != Strategy::Construct) return;
    const DigitMap& map = atlas.map();
    const BigInt h = *as_dense(map.base(), info.h, std::numeric_limits<std::uint64_t>::max());
    bool shift_ok = true;
    bool shift_all_ok = true;
    for (std::uint64_t y = 1; y <= info.n; ++y) {
        const BigInt image = map.iterate(BigInt(y), info.r);
        shift_ok = shift_ok && detail::iterate_shifted(map, trace.output, y, info.r) == h + image;
        shift_all_ok = shift_all_ok && atlas.in_attractor(image) &&
                       atlas.classify(BigInt(h + image), u).is_u_integer;
    }
    check("f^r(l + y) = h + f^r(y)", shift_ok);
    check("h + f^r(y) is a u-integer with f^r(y) in D", shift_all_ok);
}

}  // namespace

VerificationReport verify_witness(const CycleAtlas& atlas, const WitnessTrace& trace) {
    VerificationReport report;
    Checker check(report);
    try {
        if (!check_premises(atlas.map()).ok) {
            check("premises hold", false);
            return report;
        }
        if (trace.output.valueless_by_exception()) {
            check("witness present", false);
            return report;
        }
        std::visit(
            [&](const auto& info) {
                using T = std::decay_t<decltype(info)>;
                if constexpr (std::is_same_v<T, ShiftDetail>) {
                    verify_shift(atlas, trace, info, check);
                } else if constexpr (std::is_same_v<T, PreimageDetail>) {
                    verify_preimage(atlas, trace, info, check);
                } else if constexpr (std::is_same_v<T, PairDetail>) {
                    verify_pair(atlas, trace, info, check);
                } else if constexpr (std::is_same_v<T, ShiftAllDetail>) {
                    verify_shift_all(atlas, trace, info, check);
                } else if constexpr (std::is_same_v<T, RunDetail>) {
                    verify_run(atlas, trace, info, check);
                } else {
                    check("trace detail present", false);
                }
            },
            trace.detail);
    } catch (const std::exception& e) {
        check("replay completed", false, e.what());
    }
    return report;
}

}  // namespace digitmap
