// digitmap: command-line front end for digit-map dynamics.
//
//   digitmap analyze  --e 2 --b 10
//   digitmap check    --map happy.json
//   digitmap classify 19 --u 1 --e 2 --b 10
//   digitmap sieve    --e 2 --b 10 --u 1 --bound 10000 --min-len 3
//   digitmap witness  --kind pair --u 1 --x 1 --strategy construct --e 2 --b 10
//   digitmap happy    --e 2 --b 10
//
// Exit codes: 0 success, 1 premises fail, 2 invalid input, 3 budget or depth exceeded.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "digitmap/atlas.hpp"
#include "digitmap/errors.hpp"
#include "digitmap/hypotheses.hpp"
#include "digitmap/json_io.hpp"
#include "digitmap/sieve.hpp"
#include "digitmap/witness.hpp"

using namespace digitmap;

namespace {

enum Exit { kOk = 0, kPremises = 1, kInvalid = 2, kExceeded = 3 };

struct MapSource {
    std::string file;
    std::string table;
    std::optional<std::uint32_t> base;
    std::optional<std::uint32_t> exponent;
    std::optional<std::uint32_t> power_base;

    void attach(CLI::App* app) {
        app->add_option("--map", file, "Digit map JSON file");
        app->add_option("--table", table, "Inline digit table, comma separated (needs --base)");
        app->add_option("--base", base, "Base for --table");
        app->add_option("--e", exponent, "Power map exponent (with --b)");
        app->add_option("--b", power_base, "Power map base (with --e)");
    }

    DigitMap resolve() const {
        const int sources = (!file.empty()) + (!table.empty()) + (exponent.has_value() || power_base.has_value());
        if (sources != 1) throw InvalidInput("give exactly one map source: --map, --table, or --e/--b");
        if (!file.empty()) return load_map(file);
        if (!table.empty()) {
            if (!base) throw InvalidInput("--table needs --base");
            std::vector<std::uint64_t> values;
            std::stringstream in(table);
            for (std::string item; std::getline(in, item, ',');) {
                try {
                    std::size_t used = 0;
                    values.push_back(std::stoull(item, &used));
                    if (used != item.size()) throw std::invalid_argument(item);
                } catch (const std::exception&) {
                    throw InvalidInput("bad table entry '" + item + "'");
                }
            }
            return DigitMap(*base, std::move(values));
        }
        if (!exponent || !power_base) throw InvalidInput("power maps need both --e and --b");
        return DigitMap::power(*exponent, *power_base);
    }
};

struct Output {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

void emit(const Output& out, const json& payload, const std::string& text) {
    if (out.json()) {
        std::cout << payload.dump() << '\n';
    } else {
        std::cout << text;
    }
}

Strategy parse_strategy(const std::string& s) {
    if (s == "search") return Strategy::Search;
    if (s == "construct") return Strategy::Construct;
    throw InvalidInput("strategy must be search or construct");
}

std::string join(const std::vector<std::uint64_t>& values, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string premise_text(const PremiseReport& r) {
    std::ostringstream os;
    os << (r.ok ? "premises hold" : "premises fail") << '\n'
       << "  f(0) = 0: " << (r.f0_ok ? "yes" : "no") << '\n'
       << "  f(1) = 1: " << (r.f1_ok ? "yes" : "no") << '\n'
       << "  gcd(b, f(b-1)) = 1: " << (r.gcd_b_ok ? "yes" : "no") << "  (f(b-1) = " << r.top_value << ")\n"
       << "  m* candidates: "
       << join(std::vector<std::uint64_t>(r.m_star_candidates.begin(), r.m_star_candidates.end())) << '\n';
    for (const auto& f : r.failures) os << "  failure: " << f << '\n';
    return os.str();
}

int run_analyze(const MapSource& src, const Output& out) {
    const CycleAtlas atlas(src.resolve());
    std::ostringstream os;
    os << "threshold T = " << atlas.threshold() << '\n'
       << "cycles (" << atlas.cycles().size() << "):\n";
    for (const auto& c : atlas.cycles()) os << "  (" << join(c) << ")  length " << c.size() << '\n';
    os << "|D| = " << atlas.attractor().size() << '\n';
    emit(out, to_json(atlas), os.str());
    return kOk;
}

int run_check(const MapSource& src, const Output& out) {
    const auto report = check_premises(src.resolve());
    emit(out, to_json(report), premise_text(report));
    return report.ok ? kOk : kPremises;
}

int run_classify(const MapSource& src, const Output& out, const std::string& n_text,
                 std::optional<std::uint64_t> u) {
    const CycleAtlas atlas(src.resolve());
    const BigInt n = parse_bigint(n_text);
    if (n < 1) throw InvalidInput("classify needs n >= 1");
    std::uint64_t chosen = 0;
    if (u) {
        chosen = *u;
        atlas.cycle_of(chosen);
    } else {
        // Default to the minimum element of n's own cycle.
        const std::int32_t index = atlas.classify(n, atlas.attractor().empty() ? 0 : atlas.attractor().front()).cycle_index;
        if (index < 0) {
            json payload = {{"n", n.str()}, {"cycle_index", index}, {"reaches_zero", true}};
            emit(out, payload, n.str() + " reaches 0 and enters no cycle\n");
            return kOk;
        }
        chosen = atlas.cycles()[static_cast<std::size_t>(index)].front();
    }
    const auto c = atlas.classify(n, chosen);
    std::ostringstream os;
    os << n << ": cycle " << c.cycle_index << ", enters D after " << c.entry_steps << " steps\n";
    if (c.is_u_integer) {
        os << "  " << chosen << "-integer: reaches " << chosen << " after " << c.steps_to_u
           << " steps, phase " << c.phase << " mod " << c.cycle_length << '\n';
    } else {
        os << "  not a " << chosen << "-integer\n";
    }
    emit(out, to_json(c, n, chosen), os.str());
    return kOk;
}

int run_sieve(const MapSource& src, const Output& out, std::uint64_t u, std::uint64_t bound,
              std::uint64_t min_len, bool first_only, unsigned threads) {
    const CycleAtlas atlas(src.resolve());
    const Sieve sieve(atlas);
    std::vector<RunRecord> runs;
    if (first_only) {
        if (auto run = sieve.first_run_of_length(u, min_len, bound, threads)) runs.push_back(*run);
    } else {
        runs = sieve.find_runs(u, bound, min_len, threads);
    }
    for (const auto& run : runs) {
        if (out.json()) {
            std::cout << to_json(run).dump() << '\n';
        } else {
            std::cout << "run of " << run.length << " " << u << "-integers starting at " << run.start
                      << (run.clipped ? " (clipped at bound)" : "") << '\n';
        }
    }
    if (runs.empty() && !out.json()) std::cout << "no runs found\n";
    return kOk;
}

struct WitnessArgs {
    std::string kind;
    std::uint64_t u = 1;
    std::string x = "1";
    std::string m = "1";
    std::uint64_t r = 1;
    std::string a = "0";
    std::optional<std::string> h;
    std::uint64_t n = 1;
    std::string strategy = "search";
    std::string sub_strategy = "search";
    std::string seed = "aligned";
    std::string seed_scale = "power";
    std::uint64_t budget = 10'000'000;
    unsigned depth_limit = 2;
    std::uint64_t limit_digits = 100'000;
};

int run_witness(const MapSource& src, const Output& out, const WitnessArgs& args) {
    const CycleAtlas atlas(src.resolve());
    WitnessOptions options;
    options.strategy = parse_strategy(args.strategy);
    options.sub_strategy = parse_strategy(args.sub_strategy);
    if (args.seed != "aligned" && args.seed != "from-u") throw InvalidInput("--seed must be aligned or from-u");
    options.seed_element = args.seed == "aligned" ? SeedElement::PhaseAligned : SeedElement::FromU;
    if (args.seed_scale != "power" && args.seed_scale != "scan") throw InvalidInput("--seed-scale must be power or scan");
    options.seed_scale = args.seed_scale == "power" ? SeedScale::PowerOfBase : SeedScale::Scan;
    options.search_budget = args.budget;
    options.depth_limit = args.depth_limit;
    options.limit_digits = args.limit_digits;

    WitnessTrace trace;
    if (args.kind == "shift") {
        trace = shift_witness(atlas, parse_bigint(args.x), parse_bigint(args.m), args.r, options);
    } else if (args.kind == "preimage") {
        trace = congruent_u_preimage(atlas, args.u, parse_bigint(args.a),
                                     parse_bigint(args.h.value_or(std::to_string(args.u))), options);
    } else if (args.kind == "pair") {
        trace = concurrent_pair(atlas, args.u, parse_bigint(args.x), options);
    } else if (args.kind == "shiftall") {
        trace = shift_all_witness(atlas, args.u, options);
    } else if (args.kind == "run") {
        trace = consecutive_run(atlas, args.u, args.n, options);
    } else {
        throw InvalidInput("--kind must be shift, preimage, pair, shiftall or run");
    }
    std::ostringstream os;
    os << statement_tag(trace.statement) << " witness (" << strategy_name(trace.strategy) << "): ";
    const auto payload = to_json(trace);
    const auto& output = payload.at("output");
    if (output.contains("value")) {
        os << output.at("value").get<std::string>() << '\n';
    } else if (output.at("kind") == "sparse") {
        os << "sparse number with " << output.at("digits").get<std::string>() << " digits, "
           << output.at("sparse").at("runs").size() << " runs\n";
    } else {
        os << "symbolic preimage chain of level " << output.at("level") << '\n';
    }
    for (const auto& c : trace.verification.checks) {
        os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << '\n';
    }
    emit(out, payload, os.str());
    return trace.verification.ok() ? kOk : kExceeded;
}

int run_happy(const Output& out, std::uint32_t e, std::uint32_t b) {
    const auto pan = pan_condition(e, b);
    json payload = {{"e", e}, {"b", b}, {"pan_condition", to_json(pan)}};
    std::ostringstream os;
    os << "pan condition for e=" << e << ", b=" << b << ": " << (pan.holds ? "holds" : "fails") << '\n';
    for (const auto& f : pan.facts) {
        os << "  p = " << f.prime << ": " << f.prime_minus_one << (f.divides ? " divides " : " does not divide ")
           << e - 1 << '\n';
    }
    if (!pan.holds) {
        emit(out, payload, os.str());
        return kPremises;
    }
    const auto cert = construct_g(e, b);
    const auto premises = check_premises(DigitMap::power(e, b));
    payload["certificate"] = to_json(cert);
    payload["premises"] = to_json(premises);
    os << "g = " << cert.g << " (certificate " << (cert.valid ? "valid" : "INVALID")
       << ", gcd(f(g) - g, f(b-1)) = " << cert.gcd_with_top << ")\n";
    emit(out, payload, os.str() + premise_text(premises));
    return cert.valid ? kOk : kPremises;
}

int report_error(const Output& out, int code, const char* kind, const std::string& message) {
    if (out.json()) {
        std::cout << json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump() << '\n';
    } else {
        std::cerr << "error: " << message << '\n';
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Digit-map dynamics: cycles, premises, witnesses and run sieves"};
    app.require_subcommand(1);
    Output out;
    unsigned threads = threads_from_env();
    app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", threads, "Worker threads (default DIGITMAP_THREADS or 1)");

    MapSource src;
    auto* analyze = app.add_subcommand("analyze", "Cycles and attractor set of a map");
    auto* check = app.add_subcommand("check", "Check the run-existence premises for a map");
    auto* classify = app.add_subcommand("classify", "Classify an integer by its eventual cycle");
    auto* sieve = app.add_subcommand("sieve", "Find runs of consecutive u-integers");
    auto* witness = app.add_subcommand("witness", "Generate and verify a constructive witness");
    auto* happy = app.add_subcommand("happy", "Pan condition and digit g for the (e, b) power map");
    for (auto* sub : {analyze, check, classify, sieve, witness}) {
        src.attach(sub);
        sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--threads", threads, "Worker threads");
    }
    happy->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string classify_n;
    std::optional<std::uint64_t> classify_u;
    classify->add_option("n", classify_n, "Integer to classify")->required();
    classify->add_option("--u", classify_u, "Cycle element u");

    std::uint64_t sieve_u = 1, sieve_bound = 0, sieve_min = 1;
    bool sieve_first = false;
    sieve->add_option("--u", sieve_u, "Cycle element u")->required();
    sieve->add_option("--bound", sieve_bound, "Scan [1, bound]")->required();
    sieve->add_option("--min-len", sieve_min, "Minimum run length");
    sieve->add_flag("--first", sieve_first, "Only the first run of length >= min-len");

    WitnessArgs wargs;
    witness->add_option("--kind", wargs.kind, "shift | preimage | pair | shiftall | run")->required();
    witness->add_option("--u", wargs.u, "Cycle element u");
    witness->add_option("--x", wargs.x, "Shift amount x");
    witness->add_option("--m", wargs.m, "Range bound m (shift)");
    witness->add_option("--r", wargs.r, "Iteration depth r (shift)");
    witness->add_option("--a", wargs.a, "Residue a (preimage)");
    witness->set_help_flag("--help", "Print this help message and exit");
    witness->add_option("--h", wargs.h, "u-integer h to be concurrent with (preimage)");
    witness->add_option("--n", wargs.n, "Run length n (run)");
    witness->add_option("--strategy", wargs.strategy, "search | construct");
    witness->add_option("--sub-strategy", wargs.sub_strategy, "Strategy for ingredient witnesses");
    witness->add_option("--seed", wargs.seed, "aligned | from-u (preimage seed element)");
    witness->add_option("--seed-scale", wargs.seed_scale, "power | scan (preimage seed size)");
    witness->add_option("--budget", wargs.budget, "Search budget");
    witness->add_option("--depth-limit", wargs.depth_limit, "Concrete depth limit");
    witness->add_option("--limit-digits", wargs.limit_digits, "Largest dense expansion");

    std::uint32_t happy_e = 2, happy_b = 10;
    happy->add_option("--e", happy_e, "Exponent e")->required();
    happy->add_option("--b", happy_b, "Base b")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*analyze) return run_analyze(src, out);
        if (*check) return run_check(src, out);
        if (*classify) return run_classify(src, out, classify_n, classify_u);
        if (*sieve) return run_sieve(src, out, sieve_u, sieve_bound, sieve_min, sieve_first, threads);
        if (*witness) return run_witness(src, out, wargs);
        if (*happy) return run_happy(out, happy_e, happy_b);
    } catch (const PremiseFailure& e) {
        return report_error(out, kPremises, "premises", e.what());
    } catch (const BudgetExceeded& e) {
        return report_error(out, kExceeded, "budget", e.what());
    } catch (const DepthExceeded& e) {
        return report_error(out, kExceeded, "depth", e.what());
    } catch (const TooLarge& e) {
        return report_error(out, kExceeded, "too_large", e.what());
    } catch (const std::invalid_argument& e) {
        return report_error(out, kInvalid, "invalid_input", e.what());
    } catch (const std::exception& e) {
        return report_error(out, kInvalid, "error", e.what());
    }
    return kInvalid;
}
