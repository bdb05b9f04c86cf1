#pragma once

// JSON forms of rings, computed sets, element profiles, verification
// reports and battery configs. Key order is fixed so that output is
// byte-stable across runs.

#include <string>

#include <json.hpp>

#include "primesrc/elements.hpp"
#include "primesrc/primeness.hpp"
#include "primesrc/ring.hpp"
#include "primesrc/subset.hpp"
#include "primesrc/theorems.hpp"

namespace primesrc {

using Json = nlohmann::ordered_json;

/// Sorted (by index) array of member labels.
Json subset_to_json(const FiniteRing& r, const Subset& s);

/// {"kind": ..., "a": label|null, "A": [...], "members": [...]}
Json source_to_json(const FiniteRing& r, const SourceResult& result);

Json profile_to_json(const FiniteRing& r, const ElementProfile& p);
Json entry_to_json(const Entry& e);
Json report_to_json(const VerificationReport& report);

/// {"order": n, "add": [[...]], "mul": [[...]], "labels": [...], "one": i}
/// ("one" only when the ring has an identity).
Json ring_to_json(const FiniteRing& r);

/// Reads the ring file format and validates every axiom.
FiniteRing ring_from_json(const Json& j, const Limits& limits = {});
CustomRingSpec custom_spec_from_json(const Json& j);

/// Battery config: {"rings": [EXPR | ring-object ...], "subset_policy": ...,
/// "homs": [...], "products": [[EXPR, EXPR] ...], "theorems": [ID ...],
/// "auto_homs": bool, "auto_products": bool, "max_order": n}.
/// Missing keys take their BatteryConfig defaults; "rings" defaults to none.
BatteryConfig battery_from_json(const Json& j);

/// Parses a text document, rethrowing JSON syntax errors as Error.
Json parse_json(const std::string& text);
Json load_json_file(const std::string& path);

}  // namespace primesrc
