#pragma once

// Single-field tampering of serialized certificates, for rejection tests.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gocert/certificate_json.hpp"

namespace gocert::testing {

struct Mutation {
  std::string label;
  Json document;
};

inline std::string bump_decimal(const std::string& s, int delta) {
  return (BigInt(s) + delta).str();
}

/// Deterministic list of `count` mutations of a valid certificate with at
/// least three nodes. Each one changes exactly one field (or, for the
/// structural cases, one node entry).
inline std::vector<Mutation> single_field_mutations(const Json& cert, std::size_t count) {
  using Edit = std::pair<std::string, std::function<void(Json&, std::size_t)>>;
  auto positive = [](const Json& nodes, std::size_t i) {
    // Nodes with a degree bound, cycling from i.
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const std::size_t j = (i + k) % nodes.size();
      if (!nodes[j]["degree_bound"].is_null()) return j;
    }
    return std::size_t{0};
  };
  auto child = [](const Json& nodes, std::size_t i) { return 1 + i % (nodes.size() - 1); };

  const std::vector<Edit> edits{
      {"degree_bound-1", [&](Json& c, std::size_t i) {
         Json& n = c["nodes"][positive(c["nodes"], i)];
         n["degree_bound"] = bump_decimal(n["degree_bound"], -1);
       }},
      {"degree_bound+1", [&](Json& c, std::size_t i) {
         Json& n = c["nodes"][positive(c["nodes"], i)];
         n["degree_bound"] = bump_decimal(n["degree_bound"], 1);
       }},
      {"top_form_bound+2", [&](Json& c, std::size_t i) {
         Json& n = c["nodes"][positive(c["nodes"], i)];
         n["top_form_bound"] = bump_decimal(n["top_form_bound"], 2);
       }},
      {"degree_bound=null", [&](Json& c, std::size_t i) { c["nodes"][positive(c["nodes"], i)]["degree_bound"] = nullptr; }},
      {"dimension+1", [](Json& c, std::size_t i) {
         Json& n = c["nodes"][i % c["nodes"].size()];
         n["dimension"] = n["dimension"].get<int>() + 1;
       }},
      {"kind", [](Json& c, std::size_t i) {
         Json& n = c["nodes"][i % c["nodes"].size()];
         n["kind"] = n["kind"] == "dimension_zero" ? "stratum_descent" : "dimension_zero";
       }},
      {"fiber_dimension+1", [&](Json& c, std::size_t i) {
         Json& n = c["nodes"][child(c["nodes"], i)];
         n["fiber_dimension"] = n["fiber_dimension"].get<int>() + 1;
       }},
      {"contradiction.deg_hom", [&](Json& c, std::size_t i) {
         Json& n = c["nodes"][positive(c["nodes"], i)];
         n["contradiction"]["deg_hom"] = n["contradiction"]["deg_hom"].get<int>() - 1;
       }},
      {"contradiction.conclusion", [&](Json& c, std::size_t i) {
         Json& n = c["nodes"][positive(c["nodes"], i)]["contradiction"];
         n["conclusion"] = n["conclusion"] == "contradiction" ? "inconclusive" : "contradiction";
       }},
      {"contradiction.forced_iso", [&](Json& c, std::size_t i) {
         Json& n = c["nodes"][positive(c["nodes"], i)]["contradiction"];
         n["forced_iso"] = !n["forced_iso"].get<bool>();
       }},
      {"derived_flags-drop", [](Json& c, std::size_t i) {
         Json& f = c["nodes"][i % c["nodes"].size()]["derived_flags"];
         if (f.empty()) f.push_back("unrecorded"); else f.erase(f.size() - 1);
       }},
      {"prose_steps-drop", [](Json& c, std::size_t i) { c["nodes"][i % c["nodes"].size()]["prose_steps"].erase(0); }},
      {"t-change", [&](Json& c, std::size_t i) {
         Json& t = c["nodes"][child(c["nodes"], i)]["t"];
         t = t.size() == 1 ? Json::array() : Json::array({t[0]});
       }},
      {"child-dimension-not-smaller", [&](Json& c, std::size_t i) {
         const std::size_t j = child(c["nodes"], i);
         const std::size_t parent = c["nodes"][j]["parent"];
         c["nodes"][j]["ramification"]["s_inf"] = c["nodes"][parent]["ramification"]["s_inf"];
       }},
      {"ramification.p", [](Json& c, std::size_t i) {
         Json& r = c["nodes"][i % c["nodes"].size()]["ramification"];
         r["p"] = r["p"] == 2 ? 3 : 2;
       }},
      {"ramification.s_fin+2", [](Json& c, std::size_t i) {
         Json& r = c["nodes"][i % c["nodes"].size()]["ramification"];
         r["s_fin"] = r["s_fin"].get<std::uint64_t>() + 2;
       }},
      {"parent", [&](Json& c, std::size_t i) {
         const std::size_t j = 2 + i % (c["nodes"].size() - 2);
         Json& n = c["nodes"][j];
         n["parent"] = n["parent"].get<std::size_t>() == 0 ? j - 1 : 0;
       }},
      {"id", [](Json& c, std::size_t i) {
         Json& n = c["nodes"][i % c["nodes"].size()];
         n["id"] = n["id"].get<std::size_t>() + 1;
       }},
      {"verdict", [](Json& c, std::size_t) { c["verdict"] = c["verdict"] == "finite" ? "inconclusive" : "finite"; }},
      {"tool_version", [](Json& c, std::size_t) { c["tool_version"] = "gocert 0.9.0"; }},
      {"config.p", [](Json& c, std::size_t) { c["config"]["p"] = c["config"]["p"] == 5 ? 7 : 5; }},
      {"config.curve.g", [](Json& c, std::size_t) { c["config"]["curve"]["g"] = c["config"]["curve"]["g"].get<int>() + 1; }},
      {"rigidity.higgs_count", [](Json& c, std::size_t) {
         c["rigidity"]["higgs_count"] = c["rigidity"]["higgs_count"].is_null() ? Json("1") : Json(bump_decimal(c["rigidity"]["higgs_count"], 1));
       }},
      {"rigidity.special", [](Json& c, std::size_t) { c["rigidity"]["special"] = !c["rigidity"]["special"].get<bool>(); }},
      {"diagnostic", [](Json& c, std::size_t) { c["diagnostic"] = "tampered"; }},
      {"drop-node", [](Json& c, std::size_t i) { c["nodes"].erase(1 + i % (c["nodes"].size() - 1)); }},
  };

  const Json original = cert;
  std::vector<Mutation> out;
  for (std::size_t k = 0; out.size() < count; ++k) {
    const Edit& e = edits[k % edits.size()];
    Json doc = original;
    e.second(doc, k / edits.size() + k);
    if (doc == original) continue;
    out.push_back({e.first + "#" + std::to_string(k), std::move(doc)});
  }
  return out;
}

}  // namespace gocert::testing
