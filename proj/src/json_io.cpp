#include "digitmap/json_io.hpp"

#include <fstream>

#include "digitmap/errors.hpp"

namespace digitmap {

namespace {

std::string str(const BigInt& v) { return v.str(); }

json nums(const std::vector<BigInt>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(str(v));
    return out;
}

// Small sparse witnesses also carry their decimal value.
constexpr std::uint64_t kDecimalDigits = 200;

}  // namespace

DigitMap map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("base")) throw InvalidInput("map JSON needs a \"base\" field");
    const auto base = j.at("base").get<std::int64_t>();
    if (base < 2 || base > DigitMap::kMaxBase) throw InvalidInput("map base out of range");
    const bool has_table = j.contains("table");
    const bool has_exponent = j.contains("exponent");
    if (has_table == has_exponent) {
        throw InvalidInput("map JSON needs exactly one of \"table\" or \"exponent\"");
    }
    if (has_exponent) {
        const auto e = j.at("exponent").get<std::int64_t>();
        if (e < 1 || e > 64) throw InvalidInput("exponent out of range");
        return DigitMap::power(static_cast<std::uint32_t>(e), static_cast<std::uint32_t>(base));
    }
    std::vector<std::uint64_t> table;
    for (const auto& entry : j.at("table")) {
        if (!entry.is_number_integer() || entry.get<std::int64_t>() < 0) {
            throw InvalidInput("table entries must be non-negative integers");
        }
        table.push_back(entry.get<std::uint64_t>());
    }
    return DigitMap(static_cast<std::uint32_t>(base), std::move(table));
}

DigitMap load_map(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open map file " + path.string());
    try {
        return map_from_json(json::parse(in));
    } catch (const json::exception& e) {
        throw InvalidInput("malformed map file " + path.string() + ": " + e.what());
    }
}

json to_json(const DigitMap& map) {
    return {{"base", map.base()}, {"table", std::vector<std::uint64_t>(map.table().begin(), map.table().end())}};
}

json to_json(const SparseNumber& s) {
    json runs = json::array();
    for (const auto& run : s.runs()) {
        runs.push_back({{"start", str(run.start)},
                        {"stride", str(run.stride)},
                        {"count", str(run.count)},
                        {"digit", run.digit}});
    }
    return {{"base", s.base()}, {"runs", runs}};
}

SparseNumber sparse_from_json(const json& j) {
    std::vector<DigitRun> runs;
    for (const auto& r : j.at("runs")) {
        runs.push_back({parse_bigint(r.at("start").get<std::string>()),
                        parse_bigint(r.at("stride").get<std::string>()),
                        parse_bigint(r.at("count").get<std::string>()),
                        r.at("digit").get<std::uint32_t>()});
    }
    return SparseNumber(j.at("base").get<std::uint32_t>(), std::move(runs));
}

json to_json(const Witness& w) {
    if (const auto* dense = std::get_if<BigInt>(&w)) return {{"kind", "dense"}, {"value", str(*dense)}};
    if (const auto* sparse = std::get_if<SparseNumber>(&w)) {
        json out = {{"kind", "sparse"}, {"digits", str(sparse->digit_length())}, {"sparse", to_json(*sparse)}};
        if (sparse->densifiable(kDecimalDigits)) out["value"] = str(sparse->to_dense(kDecimalDigits));
        return out;
    }
    const auto& deep = std::get<DeepWitness>(w);
    return {{"kind", "deep"},
            {"level", deep.level},
            {"concrete_level", deep.concrete_level},
            {"modulus", deep.modulus},
            {"order", deep.order},
            {"u", deep.u},
            {"previous_value", str(deep.previous_value)},
            {"concrete", to_json(deep.concrete)},
            {"level_r", nums(deep.level_r)},
            {"residue", deep.residue},
            {"phase", deep.phase}};
}

json to_json(const CycleAtlas& atlas) {
    json cycles = json::array();
    for (const auto& c : atlas.cycles()) cycles.push_back({{"elements", c}, {"length", c.size()}});
    return {{"map", to_json(atlas.map())},
            {"threshold", atlas.threshold()},
            {"cycles", cycles},
            {"attractor", atlas.attractor()}};
}

json to_json(const PremiseReport& report) {
    return {{"ok", report.ok},
            {"f0_ok", report.f0_ok},
            {"f1_ok", report.f1_ok},
            {"gcd_b_ok", report.gcd_b_ok},
            {"top_value", report.top_value},
            {"m_star_candidates", report.m_star_candidates},
            {"failures", report.failures}};
}

json to_json(const PanReport& report) {
    json facts = json::array();
    for (const auto& f : report.facts) {
        facts.push_back({{"prime", f.prime}, {"prime_minus_one", f.prime_minus_one}, {"divides", f.divides}});
    }
    return {{"holds", report.holds}, {"facts", facts}};
}

json to_json(const GCertificate& cert) {
    json steps = json::array();
    for (const auto& s : cert.steps) {
        steps.push_back({{"prime", s.factor.prime},
                         {"exponent", s.factor.exponent},
                         {"cofactor", s.cofactor},
                         {"generator", s.generator},
                         {"g_component", s.g_component},
                         {"nonfixed_mod_p", s.nonfixed_mod_p}});
    }
    return {{"g", cert.g}, {"steps", steps}, {"gcd_with_top", cert.gcd_with_top}, {"valid", cert.valid}};
}

json to_json(const Classification& c, const BigInt& n, std::uint64_t u) {
    json out = {{"n", str(n)},
                {"u", u},
                {"cycle_index", c.cycle_index},
                {"entry_steps", c.entry_steps},
                {"is_u_integer", c.is_u_integer}};
    if (c.is_u_integer) {
        out["steps_to_u"] = c.steps_to_u;
        out["phase"] = c.phase;
        out["cycle_length"] = c.cycle_length;
    }
    return out;
}

json to_json(const RunRecord& run) {
    return {{"u", run.u}, {"start", run.start}, {"length", run.length}, {"clipped", run.clipped}};
}

json to_json(const VerificationReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry = {{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(entry);
    }
    return {{"ok", report.ok()}, {"checks", checks}};
}

json to_json(const WitnessTrace& trace) {
    json out = {{"statement", statement_tag(trace.statement)},
                {"strategy", strategy_name(trace.strategy)},
                {"u", trace.u},
                {"output", to_json(trace.output)},
                {"notes", trace.notes},
                {"verification", to_json(trace.verification)}};
    json fields = json::object();
    std::visit(
        [&](const auto& info) {
            using T = std::decay_t<decltype(info)>;
            if constexpr (std::is_same_v<T, ShiftDetail>) {
                fields = {{"x", str(info.x)},
                          {"m", str(info.m)},
                          {"r", info.r},
                          {"level_starts", nums(info.level_starts)},
                          {"level_counts", nums(info.level_counts)}};
            } else if constexpr (std::is_same_v<T, PreimageDetail>) {
                fields = {{"a", str(info.a)},
                          {"h", str(info.h)},
                          {"modulus", info.modulus},
                          {"m_star", info.m_star},
                          {"d", info.order},
                          {"seed_element", info.seed_element},
                          {"l1", str(info.l1)},
                          {"r", str(info.r)},
                          {"ones", str(info.ones)},
                          {"chain_depth", info.chain_depth}};
            } else if constexpr (std::is_same_v<T, PairDetail>) {
                json preimages = json::array();
                for (const auto& [v, l] : info.cycle_preimages) preimages.push_back({{"v", v}, {"l", str(l)}});
                fields = {{"x", str(info.x)},   {"s", str(info.s)},   {"x1", str(info.x1)},
                          {"f_x1", str(info.f_x1)}, {"h_prime", str(info.h_prime)},
                          {"V", preimages},      {"M", str(info.big_m)}, {"boost", info.boost},
                          {"h", str(info.h)},   {"v", info.v},         {"N", str(info.n)},
                          {"t", str(info.t)},   {"x2", to_json(info.x2)}, {"f_x2", str(info.f_x2)},
                          {"k", str(info.k)},   {"min_l", str(info.min_l)}};
            } else if constexpr (std::is_same_v<T, ShiftAllDetail>) {
                json steps = json::array();
                for (const auto& s : info.steps) {
                    steps.push_back({{"subset", s.subset},
                                     {"pivot", s.pivot},
                                     {"h_pivot", to_json(s.h_pivot)},
                                     {"r", s.r},
                                     {"images", s.images},
                                     {"lifted", to_json(s.lifted)}});
                }
                fields = {{"steps", steps}};
            } else if constexpr (std::is_same_v<T, RunDetail>) {
                fields = {{"n", info.n}, {"r", info.r}};
                if (!info.h.valueless_by_exception() && !(std::holds_alternative<BigInt>(info.h) &&
                                                          std::get<BigInt>(info.h) == 0)) {
                    fields["h"] = to_json(info.h);
                }
            }
        },
        trace.detail);
    out["fields"] = fields;
    return out;
}

}  // namespace digitmap
