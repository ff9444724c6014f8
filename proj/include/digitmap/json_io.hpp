#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "digitmap/atlas.hpp"
#include "digitmap/hypotheses.hpp"
#include "digitmap/sieve.hpp"
#include "digitmap/sparse_number.hpp"
#include "digitmap/witness.hpp"

namespace digitmap {

using nlohmann::json;

/// {"base": b, "table": [...]} or {"base": b, "exponent": e}.
DigitMap map_from_json(const json& j);
DigitMap load_map(const std::filesystem::path& path);
json to_json(const DigitMap& map);

/// {"base": b, "runs": [{"start": "..", "stride": "..", "count": "..", "digit": d}]}
json to_json(const SparseNumber& s);
SparseNumber sparse_from_json(const json& j);

json to_json(const Witness& w);
json to_json(const CycleAtlas& atlas);
json to_json(const PremiseReport& report);
json to_json(const PanReport& report);
json to_json(const GCertificate& cert);
json to_json(const Classification& c, const BigInt& n, std::uint64_t u);
json to_json(const RunRecord& run);
json to_json(const VerificationReport& report);
json to_json(const WitnessTrace& trace);

}  // namespace digitmap
