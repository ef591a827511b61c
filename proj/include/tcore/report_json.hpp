#pragma once

// JSON forms of claims and reports. Integers are written as decimal strings
// and rationals as "a/b"; nlohmann::json keeps object keys sorted.

#include <json.hpp>

#include "tcore/density.hpp"
#include "tcore/etaquot.hpp"
#include "tcore/raduseller.hpp"

namespace tcore::io {

/// Accepts {"p":5,"m":15,"t":6,"u":3}; each field may also be a decimal
/// string. Throws std::invalid_argument on missing or malformed fields.
rs::CongruenceClaim claim_from_json(const nlohmann::json& j);
nlohmann::json to_json(const rs::CongruenceClaim& claim);

nlohmann::json to_json(const rs::VerificationReport& report);
rs::VerificationReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const eta::CuspReport& report);
nlohmann::json to_json(const density::DensityTable& table);

} // namespace tcore::io
