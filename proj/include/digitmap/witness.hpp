#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "digitmap/atlas.hpp"
#include "digitmap/bigint.hpp"
#include "digitmap/sparse_number.hpp"

namespace digitmap {

enum class Strategy { Search, Construct };

/// Which cycle element seeds a preimage chain l1 -> l2 -> ...
enum class SeedElement {
    /// Start from the element one phase behind h, so l2 is already concurrent with h.
    PhaseAligned,
    /// Start from u itself and extend the chain until the phase matches.
    FromU,
};

/// How the seed l1 is made larger than f(b-1) f(m*).
enum class SeedScale {
    /// l1 = w * b^(n d) with d = ord_{f(b-1)}(b).
    PowerOfBase,
    /// Smallest integer above the bound in the seed's concurrency class.
    Scan,
};

struct WitnessOptions {
    Strategy strategy = Strategy::Search;
    /// Strategy for ingredient witnesses requested by a CONSTRUCT recipe.
    Strategy sub_strategy = Strategy::Search;
    SeedElement seed_element = SeedElement::PhaseAligned;
    SeedScale seed_scale = SeedScale::PowerOfBase;
    std::uint64_t search_budget = 10'000'000;
    /// Maximum iteration depth r for concrete shift witnesses.
    unsigned depth_limit = 2;
    /// Largest dense expansion a recipe may request.
    std::uint64_t limit_digits = 100'000;
};

/// A symbolic k-fold preimage l_k with f(l_k) = l_{k-1}, ..., f(l_2) = l_1.
/// Levels above `concrete_level` are runs of value(l_{j-1}) ones at stride d
/// and exist only as this recipe.
struct DeepWitness {
    std::uint32_t base = 10;
    std::uint64_t modulus = 1;        // f(b-1)
    std::uint64_t order = 1;          // d = ord_modulus(b)
    std::uint64_t u = 1;
    std::uint32_t level = 2;          // k
    std::uint32_t concrete_level = 2;
    BigInt previous_value;            // l_{concrete_level - 1}, dense
    SparseNumber concrete;            // l_{concrete_level}
    std::vector<BigInt> level_r;      // congruence solutions r_2, r_3, ...
    std::uint64_t residue = 0;        // declared l_k mod f(b-1)
    std::uint64_t phase = 0;          // declared phase of l_k relative to u
};

using Witness = std::variant<BigInt, SparseNumber, DeepWitness>;

enum class Statement { Shift, CongruentPreimage, ConcurrentPair, ShiftAll, ConsecutiveRun };

const char* statement_tag(Statement s);   // L21, L23, C22, L22, C21
const char* strategy_name(Strategy s);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool ok() const;
    const CheckResult* first_failure() const;
};

struct ShiftDetail {
    BigInt x;
    BigInt m;               // y ranges over 1..m unless offsets is non-empty
    std::uint64_t r = 1;
    std::vector<BigInt> offsets;
    std::vector<BigInt> level_starts;   // exponent s at each recursion level, outermost first
    std::vector<BigInt> level_counts;   // run count at each level, outermost first
};

struct PreimageDetail {
    BigInt a;               // requested residue, reduced mod f(b-1)
    BigInt h;               // the u-integer the result must be concurrent with
    std::uint64_t modulus = 1;
    std::uint32_t m_star = 0;
    std::uint64_t order = 1;
    std::uint64_t seed_element = 0;
    BigInt l1;
    BigInt r;
    BigInt ones;            // l1 - r f(m*)
    std::uint32_t chain_depth = 1;
};

/// The full intermediate record of a concurrent-pair construction.
struct PairDetail {
    BigInt x;
    BigInt s;
    BigInt x1;
    BigInt f_x1;
    BigInt h_prime;
    std::vector<std::pair<std::uint64_t, BigInt>> cycle_preimages;  // (v', l_v')
    BigInt big_m;
    std::uint64_t boost = 0;   // h = h' b^(boost * phi(f(b-1)))
    BigInt h;
    std::uint64_t v = 0;
    BigInt n;
    BigInt t;
    SparseNumber x2;
    BigInt f_x2;
    BigInt k;
    BigInt min_l;
};

struct ShiftAllStep {
    std::vector<std::uint64_t> subset;     // X
    std::uint64_t pivot = 0;               // x in X \ {u}
    Witness h_pivot;                       // h_x
    std::uint64_t r = 0;
    std::vector<std::uint64_t> images;     // f^r(h_x + y) for y in X
    Witness lifted;                        // h_X = l + h_x
};

struct ShiftAllDetail {
    std::vector<ShiftAllStep> steps;       // outermost first
};

struct RunDetail {
    std::uint64_t n = 1;
    Witness h;
    std::uint64_t r = 0;
};

/// Everything a generator produced: inputs, output and the intermediates
/// needed to replay every claimed equality.
struct WitnessTrace {
    Statement statement = Statement::Shift;
    Strategy strategy = Strategy::Search;
    std::uint64_t u = 0;
    Witness output;
    std::variant<std::monostate, ShiftDetail, PreimageDetail, PairDetail, ShiftAllDetail, RunDetail>
        detail;
    std::vector<std::string> notes;
    VerificationReport verification;   // filled by the generator via verify_witness
};

/// l with f^r(l + y) = x + f^r(y) for 1 <= y <= m. Built from blocks of 1-digits
/// above the digits of y; throws DepthExceeded past depth_limit or when a
/// nested run count cannot be expanded.
WitnessTrace shift_witness(const CycleAtlas& atlas, const BigInt& x, const BigInt& m,
                           std::uint64_t r, const WitnessOptions& options = {});

/// A u-integer l = a (mod f(b-1)) concurrent with the u-integer h.
WitnessTrace congruent_u_preimage(const CycleAtlas& atlas, std::uint64_t u, const BigInt& a,
                                  const BigInt& h, const WitnessOptions& options = {});

/// A u-integer l such that l and l + x are concurrently u-integers, with l >= min_l.
WitnessTrace concurrent_pair(const CycleAtlas& atlas, std::uint64_t u, const BigInt& x,
                             const WitnessOptions& options = {}, const BigInt& min_l = 1);

/// h such that h + x is a u-integer for every x in D.
WitnessTrace shift_all_witness(const CycleAtlas& atlas, std::uint64_t u,
                               const WitnessOptions& options = {});

/// l such that l+1, ..., l+n are all u-integers.
WitnessTrace consecutive_run(const CycleAtlas& atlas, std::uint64_t u, std::uint64_t n,
                             const WitnessOptions& options = {});

/// Replays every equality and congruence the trace claims. Never throws on a
/// bad witness; failures become report entries.
VerificationReport verify_witness(const CycleAtlas& atlas, const WitnessTrace& trace);

/// Helpers shared by generators, the verifier and the CLI.
SparseNumber as_sparse(std::uint32_t base, const Witness& w);
std::optional<BigInt> as_dense(std::uint32_t base, const Witness& w, std::uint64_t limit_digits);

/// Deterministic choice of m*: the smallest admissible digit. Throws
/// PremiseFailure when the map fails the premises.
std::uint32_t choose_m_star(const DigitMap& map);

}  // namespace digitmap
