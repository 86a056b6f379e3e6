#pragma once

// Canonical JSON form of a certificate: sorted keys, no insignificant
// whitespace, newline-terminated. Unbounded integers (degree bounds, Higgs
// counts) are written as decimal strings; no floating point appears.

#include <cstdint>
#include <set>
#include <string>

#include "json.hpp"

#include "gocert/certificate.hpp"

namespace gocert {

using Json = nlohmann::json;

namespace detail {

inline Json big_or_null(const std::optional<BigInt>& v) { return v ? Json(v->str()) : Json(nullptr); }

inline Json places_json(PlaceSet s) {
  Json arr = Json::array();
  for (Place x : s.elements()) arr.push_back(x);
  return arr;
}

inline Json ramification_json(const RamificationData& rd) {
  return Json{{"p", rd.p()},
              {"f", rd.degree()},
              {"s_inf", places_json(rd.s_inf())},
              {"s_fin", rd.s_fin_count()}};
}

inline Json contradiction_json(const ContradictionVerdict& c) {
  return Json{{"deg_tangent", c.deg_tangent},
              {"deg_hom", c.deg_hom},
              {"forced_iso", c.forced_iso},
              {"conclusion", to_string(c.conclusion)}};
}

}  // namespace detail

inline Json to_json(const AnalysisConfig& cfg) {
  return Json{{"p", cfg.p},
              {"f", cfg.f},
              {"ram_inf", cfg.ram_inf},
              {"ram_fin", cfg.ram_fin},
              {"curve", Json{{"g", cfg.g}, {"n", cfg.n}}}};
}

inline Json to_json(const NodeRecord& node) {
  return Json{
      {"id", node.id},
      {"parent", node.parent ? Json(*node.parent) : Json(nullptr)},
      {"ramification", detail::ramification_json(node.rd)},
      {"t", detail::places_json(node.t)},
      {"kind", to_string(node.kind)},
      {"dimension", node.dimension},
      {"fiber_dimension", node.fiber_dimension ? Json(*node.fiber_dimension) : Json(nullptr)},
      {"degree_bound", detail::big_or_null(node.degree_bound)},
      {"top_form_bound", detail::big_or_null(node.top_form_bound)},
      {"contradiction",
       node.contradiction ? detail::contradiction_json(*node.contradiction) : Json(nullptr)},
      {"derived_flags", node.derived_flags},
      {"prose_steps", node.prose_steps},
  };
}

inline Json to_json(const RigidityRecord& r) {
  return Json{{"special", r.special},
              {"d", r.d ? Json(*r.d) : Json(nullptr)},
              {"higgs_count", detail::big_or_null(r.higgs_count)},
              {"extrapolated", r.extrapolated}};
}

inline Json to_json(const FinitenessCertificate& cert) {
  Json nodes = Json::array();
  for (const NodeRecord& node : cert.nodes) nodes.push_back(to_json(node));
  return Json{{"config", to_json(cert.config)},
              {"rigidity", cert.rigidity ? to_json(*cert.rigidity) : Json(nullptr)},
              {"nodes", std::move(nodes)},
              {"verdict", to_string(cert.verdict)},
              {"diagnostic", cert.diagnostic ? Json(*cert.diagnostic) : Json(nullptr)},
              {"tool_version", cert.tool_version}};
}

inline std::string serialize(const FinitenessCertificate& cert) { return to_json(cert).dump() + "\n"; }

// ---------------------------------------------------------------------------
// Parsing. Strict: unknown or missing keys and wrong types are schema errors.

class SchemaError : public DomainError {
 public:
  explicit SchemaError(const std::string& what) : DomainError("certificate schema: " + what) {}
};

namespace detail {

inline void expect_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + " must be an object");
  std::set<std::string> wanted(keys.begin(), keys.end());
  for (const auto& [key, value] : j.items())
    if (wanted.count(key) == 0) throw SchemaError(where + " has unexpected key '" + key + "'");
  for (const std::string& key : wanted)
    if (!j.contains(key)) throw SchemaError(where + " is missing key '" + key + "'");
}

inline std::int64_t get_int(const Json& j, const char* key, const std::string& where) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw SchemaError(where + "." + key + " must be an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw SchemaError(where + "." + key + " is out of range");
  return v.get<std::int64_t>();
}

inline std::uint64_t get_uint(const Json& j, const char* key, const std::string& where) {
  const Json& v = j.at(key);
  if (!v.is_number_unsigned()) throw SchemaError(where + "." + key + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

inline bool get_bool(const Json& j, const char* key, const std::string& where) {
  const Json& v = j.at(key);
  if (!v.is_boolean()) throw SchemaError(where + "." + key + " must be a boolean");
  return v.get<bool>();
}

inline std::string get_string(const Json& j, const char* key, const std::string& where) {
  const Json& v = j.at(key);
  if (!v.is_string()) throw SchemaError(where + "." + key + " must be a string");
  return v.get<std::string>();
}

inline std::optional<BigInt> get_big(const Json& j, const char* key, const std::string& where) {
  const Json& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_string()) throw SchemaError(where + "." + key + " must be a decimal string or null");
  const std::string s = v.get<std::string>();
  const bool digits = !s.empty() && s.find_first_not_of("0123456789") == std::string::npos &&
                      (s.size() == 1 || s[0] != '0');
  if (!digits) throw SchemaError(where + "." + key + " is not a canonical decimal integer: " + s);
  return BigInt(s);
}

inline std::vector<std::string> get_strings(const Json& j, const char* key, const std::string& where) {
  const Json& v = j.at(key);
  if (!v.is_array()) throw SchemaError(where + "." + key + " must be an array");
  std::vector<std::string> out;
  for (const Json& s : v) {
    if (!s.is_string()) throw SchemaError(where + "." + key + " must hold strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

inline PlaceSet get_places(const Json& j, const char* key, int f, const std::string& where) {
  const Json& v = j.at(key);
  if (!v.is_array()) throw SchemaError(where + "." + key + " must be an array");
  PlaceSet out;
  Place last = -1;
  for (const Json& x : v) {
    if (!x.is_number_integer()) throw SchemaError(where + "." + key + " must hold integers");
    const std::int64_t place = x.get<std::int64_t>();
    if (place <= last || place >= f)
      throw SchemaError(where + "." + key + " must be strictly ascending places below f");
    out.insert(static_cast<Place>(place));
    last = static_cast<Place>(place);
  }
  return out;
}

inline RamificationData ramification_from_json(const Json& j, const std::string& where) {
  expect_keys(j, {"p", "f", "s_inf", "s_fin"}, where);
  const std::int64_t f = get_int(j, "f", where);
  if (f < 1 || f > kMaxDegree) throw SchemaError(where + ".f out of range");
  try {
    return RamificationData(PlaceCycle(static_cast<int>(f)),
                            get_places(j, "s_inf", static_cast<int>(f), where),
                            get_uint(j, "s_fin", where), get_uint(j, "p", where));
  } catch (const SchemaError&) {
    throw;
  } catch (const DomainError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

inline Conclusion conclusion_from_string(const std::string& s, const std::string& where) {
  if (s == "contradiction") return Conclusion::contradiction;
  if (s == "inconclusive") return Conclusion::inconclusive;
  throw SchemaError(where + ".conclusion has unknown value '" + s + "'");
}

inline NodeKind kind_from_string(const std::string& s, const std::string& where) {
  if (s == "ordinary_locus") return NodeKind::ordinary_locus;
  if (s == "stratum_descent") return NodeKind::stratum_descent;
  if (s == "dimension_zero") return NodeKind::dimension_zero;
  throw SchemaError(where + ".kind has unknown value '" + s + "'");
}

inline Verdict verdict_from_string(const std::string& s) {
  if (s == "finite") return Verdict::finite;
  if (s == "inconclusive") return Verdict::inconclusive;
  if (s == "error") return Verdict::error;
  throw SchemaError("verdict has unknown value '" + s + "'");
}

inline NodeRecord node_from_json(const Json& j, const std::string& where) {
  expect_keys(j, {"id", "parent", "ramification", "t", "kind", "dimension", "fiber_dimension",
                  "degree_bound", "top_form_bound", "contradiction", "derived_flags", "prose_steps"},
              where);
  RamificationData rd = ramification_from_json(j.at("ramification"), where + ".ramification");
  NodeRecord node(get_uint(j, "id", where), std::nullopt, rd, get_places(j, "t", rd.degree(), where));
  if (!j.at("parent").is_null()) node.parent = get_uint(j, "parent", where);
  node.kind = kind_from_string(get_string(j, "kind", where), where);
  node.dimension = static_cast<int>(get_int(j, "dimension", where));
  if (!j.at("fiber_dimension").is_null())
    node.fiber_dimension = static_cast<int>(get_int(j, "fiber_dimension", where));
  node.degree_bound = get_big(j, "degree_bound", where);
  node.top_form_bound = get_big(j, "top_form_bound", where);
  if (const Json& c = j.at("contradiction"); !c.is_null()) {
    const std::string w = where + ".contradiction";
    expect_keys(c, {"deg_tangent", "deg_hom", "forced_iso", "conclusion"}, w);
    node.contradiction = ContradictionVerdict{get_int(c, "deg_tangent", w), get_int(c, "deg_hom", w),
                                              get_bool(c, "forced_iso", w),
                                              conclusion_from_string(get_string(c, "conclusion", w), w)};
  }
  node.derived_flags = get_strings(j, "derived_flags", where);
  node.prose_steps = get_strings(j, "prose_steps", where);
  return node;
}

}  // namespace detail

inline AnalysisConfig config_from_json(const Json& j, const std::string& where = "config") {
  detail::expect_keys(j, {"p", "f", "ram_inf", "ram_fin", "curve"}, where);
  AnalysisConfig cfg;
  cfg.p = detail::get_uint(j, "p", where);
  cfg.f = detail::get_int(j, "f", where);
  const Json& ram = j.at("ram_inf");
  if (!ram.is_array()) throw SchemaError(where + ".ram_inf must be an array");
  for (const Json& x : ram) {
    if (!x.is_number_integer()) throw SchemaError(where + ".ram_inf must hold integers");
    cfg.ram_inf.push_back(x.get<std::int64_t>());
  }
  cfg.ram_fin = detail::get_uint(j, "ram_fin", where);
  const Json& curve = j.at("curve");
  detail::expect_keys(curve, {"g", "n"}, where + ".curve");
  cfg.g = detail::get_int(curve, "g", where + ".curve");
  cfg.n = detail::get_int(curve, "n", where + ".curve");
  return cfg;
}

inline FinitenessCertificate certificate_from_json(const Json& j) {
  detail::expect_keys(j, {"config", "rigidity", "nodes", "verdict", "diagnostic", "tool_version"},
                      "certificate");
  FinitenessCertificate cert;
  cert.config = config_from_json(j.at("config"));
  if (const Json& r = j.at("rigidity"); !r.is_null()) {
    detail::expect_keys(r, {"special", "d", "higgs_count", "extrapolated"}, "rigidity");
    RigidityRecord rec;
    rec.special = detail::get_bool(r, "special", "rigidity");
    if (!r.at("d").is_null()) rec.d = detail::get_int(r, "d", "rigidity");
    rec.higgs_count = detail::get_big(r, "higgs_count", "rigidity");
    rec.extrapolated = detail::get_bool(r, "extrapolated", "rigidity");
    cert.rigidity = rec;
  }
  const Json& nodes = j.at("nodes");
  if (!nodes.is_array()) throw SchemaError("nodes must be an array");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    cert.nodes.push_back(detail::node_from_json(nodes[i], "nodes[" + std::to_string(i) + "]"));
  cert.verdict = detail::verdict_from_string(detail::get_string(j, "verdict", "certificate"));
  if (!j.at("diagnostic").is_null()) cert.diagnostic = detail::get_string(j, "diagnostic", "certificate");
  cert.tool_version = detail::get_string(j, "tool_version", "certificate");
  return cert;
}

/// Parses a certificate document. Throws SchemaError on malformed input.
inline FinitenessCertificate parse_certificate(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

}  // namespace gocert
