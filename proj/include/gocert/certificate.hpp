#pragma once

// Finiteness certificates: a replay of the induction over Goren-Oort strata.
// Every node is a quaternionic Shimura datum reached from the input by a
// chain of strata T; nodes of positive dimension carry the ordinary-locus
// argument (degree bound + isomonodromy contradiction), nodes of dimension
// zero close automatically.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gocert/deformation_ledger.hpp"
#include "gocert/hasse_degrees.hpp"
#include "gocert/place_cycle.hpp"
#include "gocert/strata.hpp"
#include "gocert/vhs_rigidity.hpp"

namespace gocert {

inline constexpr const char* kToolVersion = "gocert 1.0.0";

/// Trees grow roughly like 5^dim; beyond this the certificate is refused.
inline constexpr int kMaxTreeDimension = 12;

/// Raw analysis input, kept verbatim so that invalid inputs still produce a
/// certificate with an error verdict.
struct AnalysisConfig {
  std::uint64_t p = 0;
  std::int64_t f = 0;
  std::vector<std::int64_t> ram_inf;
  std::uint64_t ram_fin = 0;
  std::int64_t g = 0;
  std::int64_t n = 0;

  friend bool operator==(const AnalysisConfig&, const AnalysisConfig&) = default;
};

struct ResolvedConfig {
  RamificationData rd;
  CurveType curve;
};

/// Validates the raw input. Throws DomainError naming the first violation.
inline ResolvedConfig resolve(const AnalysisConfig& cfg) {
  if (cfg.f < 1 || cfg.f > kMaxDegree)
    throw DomainError("[F:Q] must lie in 1.." + std::to_string(kMaxDegree) + ", got " +
                      std::to_string(cfg.f));
  PlaceCycle cycle(static_cast<int>(cfg.f));
  PlaceSet s_inf;
  for (std::int64_t place : cfg.ram_inf) {
    if (place < 0 || place >= cfg.f)
      throw DomainError("ramified place " + std::to_string(place) + " outside 0.." +
                        std::to_string(cfg.f - 1));
    if (s_inf.contains(static_cast<Place>(place)))
      throw DomainError("ramified place " + std::to_string(place) + " listed twice");
    s_inf.insert(static_cast<Place>(place));
  }
  return {RamificationData(cycle, s_inf, cfg.ram_fin, cfg.p), CurveType(cfg.g, cfg.n)};
}

inline AnalysisConfig make_config(const RamificationData& rd, const CurveType& ct) {
  AnalysisConfig cfg;
  cfg.p = rd.p();
  cfg.f = rd.degree();
  for (Place x : rd.s_inf().elements()) cfg.ram_inf.push_back(x);
  cfg.ram_fin = rd.s_fin_count();
  cfg.g = ct.genus();
  cfg.n = ct.punctures();
  return cfg;
}

enum class NodeKind { ordinary_locus, stratum_descent, dimension_zero };
enum class Verdict { finite, inconclusive, error };

inline const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::ordinary_locus: return "ordinary_locus";
    case NodeKind::stratum_descent: return "stratum_descent";
    case NodeKind::dimension_zero: return "dimension_zero";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::finite: return "finite";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::error: return "error";
  }
  return "?";
}

namespace flags {
inline constexpr const char* kFiberFromDimension = "N-from-dimension-count";
inline constexpr const char* kExtrapolated12 = "extrapolated-(1,2)";
inline constexpr const char* kMaxOverAnchors = "degree-bound-max-over-anchors";
inline constexpr const char* kOrdinarityAssumed = "generic-ordinarity-assumed";
inline constexpr const char* kKodairaSpencerAssumed = "kodaira-spencer-nonvanishing-assumed";
}  // namespace flags

namespace prose {
inline constexpr const char* kGaloisConjugate =
    "Galois-conjugate reduction: some conjugate of a motivic local system underlies a VHS with "
    "non-trivial Hodge filtration";
inline constexpr const char* kComplexFiniteness =
    "external citation (Viehweg-Zuo; Takeuchi): the complex statement, finitely many curves of "
    "this type carry such local systems";
inline constexpr const char* kSeparable =
    "external citation (Stacks Project, Tag 0CD2): the map to the Shimura variety may be taken "
    "generically separable";
inline constexpr const char* kKodairaSpencer =
    "Kodaira-Spencer is an isomorphism on the Shimura variety, so some anchor place has non-zero "
    "pulled-back Kodaira-Spencer map and degree one";
inline constexpr const char* kIsomonodromy =
    "external citation (Simpson): the isomonodromy class of a deformation preserving Fil^1 dies in "
    "H^1(End(E)/End(E,P))";
inline constexpr const char* kSimpson =
    "external citation (Simpson): Higgs bundles of the graded VHS determine the local system";
inline constexpr const char* kTianXiao =
    "external citation (Tian-Xiao): the Goren-Oort stratum is a (P^1)^N-bundle over the Shimura "
    "variety of S(T), with canonically isomorphic local systems via p-isogeny";
inline constexpr const char* kFiberTrivial =
    "maps landing in a single (P^1)^N fibre pull back trivial local systems";
inline constexpr const char* kDimensionZero = "dimension zero case is automatic";
}  // namespace prose

struct NodeRecord {
  NodeRecord(std::size_t id_, std::optional<std::size_t> parent_, RamificationData rd_, PlaceSet t_)
      : id(id_), parent(parent_), rd(std::move(rd_)), t(t_) {}

  std::size_t id = 0;
  std::optional<std::size_t> parent;
  RamificationData rd;
  PlaceSet t;
  NodeKind kind = NodeKind::dimension_zero;
  int dimension = 0;
  std::optional<int> fiber_dimension;
  std::optional<BigInt> degree_bound;
  std::optional<BigInt> top_form_bound;
  std::optional<ContradictionVerdict> contradiction;
  std::vector<std::string> derived_flags;
  std::vector<std::string> prose_steps;

  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

/// Summary of the curve-type rigidity computation carried at the top level.
struct RigidityRecord {
  bool special = false;
  std::optional<std::int64_t> d;
  std::optional<BigInt> higgs_count;
  bool extrapolated = false;

  friend bool operator==(const RigidityRecord&, const RigidityRecord&) = default;
};

struct FinitenessCertificate {
  AnalysisConfig config;
  std::optional<RigidityRecord> rigidity;
  std::vector<NodeRecord> nodes;
  Verdict verdict = Verdict::error;
  std::optional<std::string> diagnostic;
  std::string tool_version = kToolVersion;
};

/// Recomputes every field of a node from its position in the tree.
/// `fiber_dim` is present exactly for non-root nodes.
inline NodeRecord make_node(std::size_t id, std::optional<std::size_t> parent,
                            const RamificationData& rd, PlaceSet t, const CurveType& ct,
                            std::optional<int> fiber_dim) {
  NodeRecord node(id, parent, rd, t);
  node.dimension = shimura_dimension(rd);
  node.fiber_dimension = fiber_dim;
  if (node.dimension == 0) {
    node.kind = NodeKind::dimension_zero;
  } else {
    node.kind = parent ? NodeKind::stratum_descent : NodeKind::ordinary_locus;
  }

  if (!parent) {
    node.prose_steps.push_back(prose::kGaloisConjugate);
    node.prose_steps.push_back(prose::kComplexFiniteness);
  } else {
    node.derived_flags.push_back(flags::kFiberFromDimension);
    node.prose_steps.push_back(prose::kTianXiao);
    node.prose_steps.push_back(prose::kFiberTrivial);
  }

  if (node.dimension > 0) {
    node.degree_bound = degree_bound(rd);
    node.top_form_bound = top_form_degree_bound(rd);
    node.contradiction = contradiction_check(ct, 1, 0);
    node.derived_flags.push_back(flags::kMaxOverAnchors);
    node.derived_flags.push_back(flags::kOrdinarityAssumed);
    node.derived_flags.push_back(flags::kKodairaSpencerAssumed);
    node.prose_steps.push_back(prose::kSeparable);
    node.prose_steps.push_back(prose::kKodairaSpencer);
    node.prose_steps.push_back(prose::kIsomonodromy);
    node.prose_steps.push_back(prose::kSimpson);
  } else {
    node.prose_steps.push_back(prose::kDimensionZero);
  }

  if (is_extrapolated(ct)) node.derived_flags.push_back(flags::kExtrapolated12);
  return node;
}

inline RigidityRecord make_rigidity(const CurveType& ct) {
  const FinitenessVerdict v = finiteness_verdict(ct);
  return {v.finite, v.d, v.finite_count, v.extrapolated};
}

/// finite iff the curve type is special and every node of positive dimension
/// closes with a contradiction.
inline Verdict tree_verdict(const CurveType& ct, const std::vector<NodeRecord>& nodes) {
  if (!is_special(ct)) return Verdict::inconclusive;
  for (const NodeRecord& node : nodes) {
    if (node.dimension == 0) continue;
    if (!node.contradiction || node.contradiction->conclusion != Conclusion::contradiction ||
        !node.degree_bound)
      return Verdict::inconclusive;
  }
  return Verdict::finite;
}

namespace detail {

inline void grow_tree(std::vector<NodeRecord>& nodes, const RamificationData& rd, PlaceSet t,
                      std::optional<std::size_t> parent, std::optional<int> fiber_dim,
                      const CurveType& ct) {
  const std::size_t id = nodes.size();
  nodes.push_back(make_node(id, parent, rd, t, ct, fiber_dim));
  for (const StratumChild& child : strata_children(rd)) {
    const int n = fiber_dimension(Stratum(rd, child.t));
    grow_tree(nodes, child.induced, child.t, id, n, ct);
  }
}

}  // namespace detail

inline FinitenessCertificate build_certificate(const AnalysisConfig& cfg) {
  FinitenessCertificate cert;
  cert.config = cfg;
  std::optional<ResolvedConfig> resolved;
  try {
    resolved.emplace(resolve(cfg));
  } catch (const DomainError& e) {
    cert.verdict = Verdict::error;
    cert.diagnostic = e.what();
    return cert;
  }
  const auto& [rd, ct] = *resolved;
  if (shimura_dimension(rd) > kMaxTreeDimension) {
    cert.verdict = Verdict::error;
    cert.diagnostic = "Shimura variety of dimension " + std::to_string(shimura_dimension(rd)) +
                      " exceeds the supported tree dimension " + std::to_string(kMaxTreeDimension);
    return cert;
  }
  cert.rigidity = make_rigidity(ct);
  detail::grow_tree(cert.nodes, rd, PlaceSet{}, std::nullopt, std::nullopt, ct);
  cert.verdict = tree_verdict(ct, cert.nodes);
  return cert;
}

inline FinitenessCertificate build_certificate(const RamificationData& rd, const CurveType& ct) {
  return build_certificate(make_config(rd, ct));
}

}  // namespace gocert
