#pragma once

#include <json.hpp>

#include "domination/witness.hpp"

namespace domination {

/// Words serialize as arrays of signed generator indices; manifolds as
/// description strings; rationals never occur in schemas.
nlohmann::json schema_to_json(const BranchedCoverSchema& s);

/// Throws InputError on a malformed document.
BranchedCoverSchema schema_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace domination
