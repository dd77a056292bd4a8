#pragma once

#include <string>

#include <json.hpp>

#include "curveatlas/audit.hpp"
#include "curveatlas/classifier.hpp"
#include "curveatlas/cubic.hpp"
#include "curveatlas/max_genus.hpp"

namespace curveatlas {

inline constexpr const char* kArtifactVersion = "0.1.0";

// Integers are emitted as JSON numbers only when |v| <= 2^53 - 1; larger
// values become decimal strings so cross-language consumers never lose bits.
nlohmann::json json_int(Int v);

nlohmann::json to_json(const CohomologyAnswer& a);
nlohmann::json to_json(const FamilyReport& r);
nlohmann::json to_json(const SevenTuple& t);
nlohmann::json to_json(const RangeVerdict& v);
nlohmann::json to_json(const MaxGenusAnswer& a);
nlohmann::json to_json(const AuditTranscript& t);

// Wraps a family report / range verdict into an atlas record carrying the
// provenance block (artifact version + recorded assumptions).
nlohmann::json atlas_record(const FamilyReport& r);
nlohmann::json atlas_record(const RangeVerdict& v);

// Minimal structural validator for the subset of JSON Schema the shipped
// schema file uses: type (string or list), required, properties, enum,
// items, oneOf at any level. Returns true and leaves `error` empty on
// success.
bool validate_against_schema(const nlohmann::json& instance,
                             const nlohmann::json& schema, std::string* error);

}  // namespace curveatlas
