#pragma once

// Run reports. JSON output is byte-deterministic: object key order is the
// insertion order and every finite double prints with 17 significant digits.

#include <json.hpp>
#include <string>

#include "curvar/variance.hpp"

namespace curvar {

using Json = nlohmann::ordered_json;

/// Serialize with %.17g doubles and sorted-by-insertion keys; terminated by a
/// trailing newline.
std::string dump_deterministic(const Json& j, int indent = 2);

/// Standard report envelope: {schema_version, inputs_echo, results,
/// diagnostics, warnings}.
Json make_report(Json inputs_echo, Json results, Json diagnostics,
                 std::vector<std::string> warnings);

Json breakdown_to_json(const VarianceBreakdown& b);

}  // namespace curvar
