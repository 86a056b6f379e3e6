#pragma once

// Independent replay of a certificate: the tree shape is re-derived from
// the configuration, each node is recomputed from its own inputs, and the
// descent invariants are checked explicitly.

#include <string>
#include <utility>
#include <vector>

#include "gocert/certificate.hpp"
#include "gocert/certificate_json.hpp"

namespace gocert {

struct VerifyReport {
  bool ok = true;
  std::string node_path;  // empty for certificate-level mismatches
  std::string message;

  explicit operator bool() const { return ok; }
};

namespace detail {

inline VerifyReport fail(std::string path, std::string message) {
  return {false, std::move(path), std::move(message)};
}

/// "nodes[7]: root > T={0} > T={2}"
inline std::string node_path(const std::vector<NodeRecord>& nodes, std::size_t index) {
  std::vector<std::string> parts;
  std::size_t i = index;
  for (std::size_t guard = 0; guard <= nodes.size(); ++guard) {
    if (!nodes[i].parent || *nodes[i].parent >= i) {
      parts.push_back("root");
      break;
    }
    parts.push_back("T=" + to_string(nodes[i].t));
    i = *nodes[i].parent;
  }
  std::string out = "nodes[" + std::to_string(index) + "]: ";
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (it != parts.rbegin()) out += " > ";
    out += *it;
  }
  return out;
}

/// Name of the first field where two node records differ.
inline std::string first_difference(const NodeRecord& got, const NodeRecord& want) {
  if (got.id != want.id) return "id";
  if (got.parent != want.parent) return "parent";
  if (!(got.rd == want.rd)) return "ramification";
  if (got.t != want.t) return "t";
  if (got.kind != want.kind) return "kind";
  if (got.dimension != want.dimension) return "dimension";
  if (got.fiber_dimension != want.fiber_dimension) return "fiber_dimension";
  if (got.degree_bound != want.degree_bound) return "degree_bound";
  if (got.top_form_bound != want.top_form_bound) return "top_form_bound";
  if (got.contradiction != want.contradiction) return "contradiction";
  if (got.derived_flags != want.derived_flags) return "derived_flags";
  if (got.prose_steps != want.prose_steps) return "prose_steps";
  return {};
}

/// Expected (parent, T) sequence of the pre-order walk over strata.
inline void expected_shape(const RamificationData& rd, PlaceSet t, std::optional<std::size_t> parent,
                           std::vector<std::pair<std::optional<std::size_t>, PlaceSet>>& out,
                           std::size_t limit) {
  if (out.size() > limit) return;
  const std::size_t id = out.size();
  out.emplace_back(parent, t);
  for (const StratumChild& child : strata_children(rd)) expected_shape(child.induced, child.t, id, out, limit);
}

}  // namespace detail

inline VerifyReport verify_certificate(const FinitenessCertificate& cert) {
  using detail::fail;
  if (cert.tool_version != kToolVersion)
    return fail("", "unsupported tool_version '" + cert.tool_version + "'");

  std::optional<ResolvedConfig> resolved;
  std::string config_error;
  try {
    resolved.emplace(resolve(cert.config));
  } catch (const DomainError& e) {
    config_error = e.what();
  }
  if (resolved && shimura_dimension(resolved->rd) > kMaxTreeDimension) {
    const FinitenessCertificate expected = build_certificate(cert.config);
    config_error = *expected.diagnostic;
    resolved.reset();
  }

  if (!resolved) {
    if (cert.verdict != Verdict::error) return fail("", "config is invalid (" + config_error + ") but verdict is not error");
    if (cert.diagnostic != config_error) return fail("", "diagnostic does not match the config error");
    if (cert.rigidity) return fail("", "error certificate carries a rigidity record");
    if (!cert.nodes.empty()) return fail("", "error certificate carries nodes");
    return {};
  }
  const auto& [rd, ct] = *resolved;
  if (cert.diagnostic) return fail("", "diagnostic present on a valid config");
  if (cert.rigidity != make_rigidity(ct)) return fail("", "rigidity record does not match the curve type");

  const auto& nodes = cert.nodes;
  if (nodes.empty()) return fail("", "certificate has no nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NodeRecord& node = nodes[i];
    const std::string path = detail::node_path(nodes, i);
    if (node.id != i) return fail(path, "id is " + std::to_string(node.id) + ", expected " + std::to_string(i));

    // Tree invariants, checked before any recomputation.
    if (i == 0) {
      if (node.parent) return fail(path, "root has a parent");
      if (!node.t.empty()) return fail(path, "root stratum is not T = {}");
      if (!(node.rd == rd)) return fail(path, "root ramification does not match the config");
    } else {
      if (!node.parent || *node.parent >= i) return fail(path, "parent must precede the node");
      const NodeRecord& parent = nodes[*node.parent];
      const int parent_dim = shimura_dimension(parent.rd);
      const int dim = shimura_dimension(node.rd);
      if (dim >= parent_dim)
        return fail(path, "child dimension " + std::to_string(dim) +
                              " is not smaller than parent dimension " + std::to_string(parent_dim));
      if (node.t.empty()) return fail(path, "descent along the empty stratum");
    }
    if ((node.kind == NodeKind::dimension_zero) != (shimura_dimension(node.rd) == 0))
      return fail(path, "kind is dimension_zero exactly when the dimension is zero");

    std::optional<int> fiber;
    if (node.parent) {
      const NodeRecord& parent = nodes[*node.parent];
      try {
        const Stratum st(parent.rd, node.t);
        if (!(induced_ramification(st) == node.rd))
          return fail(path, "ramification is not S(T) of the parent for T=" + to_string(node.t));
        fiber = fiber_dimension(st);
      } catch (const DomainError& e) {
        return fail(path, std::string("T is not a valid stratum of the parent: ") + e.what());
      }
    }
    const NodeRecord want = make_node(i, node.parent, node.rd, node.t, ct, fiber);
    if (const std::string field = detail::first_difference(node, want); !field.empty())
      return fail(path, "field '" + field + "' does not match its recomputed value");
  }

  // Every non-ordinary case must be present, in canonical order, exactly once.
  std::vector<std::pair<std::optional<std::size_t>, PlaceSet>> shape;
  detail::expected_shape(rd, PlaceSet{}, std::nullopt, shape, nodes.size());
  for (std::size_t i = 0; i < std::min(shape.size(), nodes.size()); ++i) {
    if (nodes[i].parent != shape[i].first || nodes[i].t != shape[i].second)
      return fail(detail::node_path(nodes, i), "node is out of canonical strata order");
  }
  if (shape.size() != nodes.size())
    return fail("", "certificate has " + std::to_string(nodes.size()) + " nodes, the strata tree has " +
                        (shape.size() > nodes.size() ? "more" : std::to_string(shape.size())));

  if (cert.verdict != tree_verdict(ct, nodes))
    return fail("", std::string("verdict '") + to_string(cert.verdict) + "' does not follow from the nodes");
  return {};
}

/// Parses and verifies a serialized certificate; schema errors are reported
/// as verification failures.
inline VerifyReport verify_document(const std::string& text) {
  try {
    return verify_certificate(parse_certificate(text));
  } catch (const DomainError& e) {
    return {false, "", e.what()};
  }
}

}  // namespace gocert
