#include "curveatlas/json_io.hpp"

namespace curveatlas {

using nlohmann::json;

json json_int(Int v) {
  if (v.abs() <= Int(9007199254740991ll)) return v.as_i64();  // 2^53 - 1
  return v.str();
}

json to_json(const CohomologyAnswer& a) {
  if (a.is_known()) return json{{"kind", "known"}, {"value", json_int(a.value())}};
  return json{{"kind", "unknown"}, {"reason", a.reason()}};
}

json to_json(const FamilyReport& r) {
  json j{
      {"s", json_int(r.s)},
      {"a", json_int(r.a)},
      {"b", json_int(r.b)},
      {"d", json_int(r.d)},
      {"g", json_int(r.g)},
      {"t", json_int(r.t)},
      {"dim_w", json_int(r.dim_w)},
      {"h1_ideal_s", to_json(r.h1_ideal_s)},
      {"case", to_string(r.theorem_case)},
      {"status", to_string(r.status)},
  };
  if (r.theorem_case == TheoremCase::HypothesisFailed)
    j["failed_condition"] = r.failed_condition;
  if (!r.status_note.empty()) j["status_note"] = r.status_note;
  if (r.critical_family) {
    j["critical_family"] = json{{"family", to_string(r.critical_family->family)},
                                {"n", json_int(r.critical_family->n)}};
  } else {
    j["critical_family"] = nullptr;
  }
  return j;
}

json to_json(const SevenTuple& t) {
  json m = json::array();
  for (const Int& mi : t.m) m.push_back(json_int(mi));
  return json{{"delta", json_int(t.delta)}, {"m", m}};
}

json to_json(const RangeVerdict& v) {
  json certs = json::array();
  for (const auto& c : v.proven.certificates) {
    json jc{{"cert", cert_name(c)}};
    if (c.kind == CertKind::Quad10MaxGenusT) jc["t"] = json_int(c.t);
    if (c.witness) jc["witness"] = to_json(*c.witness);
    certs.push_back(jc);
  }
  json skipped = json::array();
  for (const Int& t : v.proven.skipped_t) skipped.push_back(json_int(t));
  return json{
      {"d", json_int(v.d)},
      {"g", json_int(v.g)},
      {"dim_w3", json_int(v.dim_w3)},
      {"in_conjecture_range", v.in_conjecture_range},
      {"proven_by", certs},
      {"skipped_t", skipped},
      {"existence", to_string(v.existence)},
      {"witness_search_skipped", v.witness_search_skipped},
  };
}

json to_json(const MaxGenusAnswer& a) {
  switch (a.kind) {
    case MaxGenusAnswer::Kind::Exact:
      return json{{"kind", "exact"},
                  {"value", json_int(a.value)},
                  {"regime", a.regime == GenusRegime::CRange
                                 ? "c_range"
                                 : "extended_c_range"}};
    case MaxGenusAnswer::Kind::Conjectural:
      return json{{"kind", "conjectural"},
                  {"value", json_int(a.value)},
                  {"source", a.note}};
    case MaxGenusAnswer::Kind::OutOfRange:
      return json{{"kind", "out_of_range"}, {"reason", a.note}};
  }
  return nullptr;
}

json to_json(const AuditTranscript& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json jr{{"label", r.label},
            {"computed", json_int(r.computed)},
            {"flagged", r.flagged},
            {"match", r.matches()}};
    jr["printed"] = r.printed ? json_int(*r.printed) : json(nullptr);
    rows.push_back(jr);
  }
  return json{{"case", t.case_id},
              {"rows", rows},
              {"all_unflagged_match", t.all_unflagged_match()}};
}

namespace {

json provenance(const std::vector<std::string>& assumptions) {
  return json{{"artifact_version", kArtifactVersion},
              {"assumptions", assumptions}};
}

}  // namespace

json atlas_record(const FamilyReport& r) {
  json j = to_json(r);
  j["kind"] = "family_report";
  j["provenance"] = provenance({r.assumption});
  return j;
}

json atlas_record(const RangeVerdict& v) {
  json j = to_json(v);
  j["kind"] = "range_verdict";
  j["provenance"] = provenance(
      {"dim W = d + g + 18 (valid for d > 9)",
       "quad10_max_genus_t certificates assume the general curve is linearly "
       "normal"});
  return j;
}

namespace {

bool type_matches(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

bool validate_node(const json& inst, const json& schema, std::string path,
                   std::string* error);

bool check_type(const json& inst, const json& tspec, const std::string& path,
                std::string* error) {
  if (tspec.is_string()) {
    if (!type_matches(inst, tspec.get<std::string>())) {
      if (error) *error = path + ": expected type " + tspec.get<std::string>();
      return false;
    }
    return true;
  }
  if (tspec.is_array()) {
    for (const auto& t : tspec)
      if (t.is_string() && type_matches(inst, t.get<std::string>())) return true;
    if (error) *error = path + ": value matches none of the allowed types";
    return false;
  }
  return true;
}

bool validate_node(const json& inst, const json& schema, std::string path,
                   std::string* error) {
  if (schema.contains("oneOf")) {
    for (const auto& sub : schema["oneOf"]) {
      std::string ignored;
      if (validate_node(inst, sub, path, &ignored)) return true;
    }
    if (error) *error = path + ": no oneOf branch matched";
    return false;
  }
  if (schema.contains("type") &&
      !check_type(inst, schema["type"], path, error))
    return false;
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"])
      if (e == inst) { found = true; break; }
    if (!found) {
      if (error) *error = path + ": value not in enum";
      return false;
    }
  }
  if (inst.is_object()) {
    if (schema.contains("required")) {
      for (const auto& k : schema["required"]) {
        if (!inst.contains(k.get<std::string>())) {
          if (error)
            *error = path + ": missing required key " + k.get<std::string>();
          return false;
        }
      }
    }
    if (schema.contains("properties")) {
      for (auto it = schema["properties"].begin();
           it != schema["properties"].end(); ++it) {
        if (inst.contains(it.key()) &&
            !validate_node(inst[it.key()], it.value(), path + "/" + it.key(),
                           error))
          return false;
      }
    }
  }
  if (inst.is_array() && schema.contains("items")) {
    int i = 0;
    for (const auto& el : inst) {
      if (!validate_node(el, schema["items"],
                         path + "[" + std::to_string(i) + "]", error))
        return false;
      ++i;
    }
  }
  return true;
}

}  // namespace

bool validate_against_schema(const json& instance, const json& schema,
                             std::string* error) {
  if (error) error->clear();
  return validate_node(instance, schema, "$", error);
}

}  // namespace curveatlas
