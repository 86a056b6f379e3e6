#pragma once

// Degree arithmetic for rank-two variations of Hodge structure on a curve of
// type (g, n) with unipotent monodromy at the n punctures. Parabolic weights
// are all zero, so every degree below is an integer.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gocert/error.hpp"

namespace gocert {

using BigInt = boost::multiprecision::cpp_int;

class CurveType {
 public:
  CurveType(std::int64_t g, std::int64_t n) : g_(g), n_(n) {
    if (g < 0 || n < 0)
      throw DomainError("curve type needs g, n >= 0, got (" + std::to_string(g) + "," +
                        std::to_string(n) + ")");
    if (2 * g - 2 + n <= 0)
      throw DomainError("curve type (" + std::to_string(g) + "," + std::to_string(n) +
                        ") is not hyperbolic: 2g - 2 + n must be positive");
  }

  std::int64_t genus() const { return g_; }
  std::int64_t punctures() const { return n_; }

  friend bool operator==(const CurveType&, const CurveType&) = default;

 private:
  std::int64_t g_;
  std::int64_t n_;
};

inline std::string to_string(const CurveType& ct) {
  return "(" + std::to_string(ct.genus()) + "," + std::to_string(ct.punctures()) + ")";
}

/// deg Omega^1_X(D) = 2g - 2 + n.
inline std::int64_t euler_bound(const CurveType& ct) { return 2 * ct.genus() - 2 + ct.punctures(); }

/// Number of line bundles L with L^2 isomorphic to a fixed bundle of the
/// given degree: the 2-torsion of the Jacobian when the degree is even.
inline BigInt square_root_count(std::int64_t g, std::int64_t target_degree) {
  if (g < 0) throw DomainError("genus must be non-negative");
  if (target_degree % 2 != 0) return 0;
  return BigInt(1) << static_cast<unsigned>(2 * g);
}

struct HodgeSolution {
  std::int64_t d = 1;                // deg Fil^1
  bool higgs_iso = false;            // source and target of theta have equal degree
  std::optional<BigInt> count;       // Higgs bundles realising d, when pinned down

  friend bool operator==(const HodgeSolution&, const HodgeSolution&) = default;
};

/// Every admissible deg Fil^1: 0 < d <= (2g - 2 + n) - d.
inline std::vector<HodgeSolution> classify_filtration(const CurveType& ct) {
  const std::int64_t e = euler_bound(ct);
  std::vector<HodgeSolution> out;
  for (std::int64_t d = 1; 2 * d <= e; ++d) {
    HodgeSolution s{d, 2 * d == e, std::nullopt};
    if (s.higgs_iso) s.count = square_root_count(ct.genus(), e);
    out.push_back(std::move(s));
  }
  return out;
}

/// Types where d is unique and the Higgs map is forced to be an isomorphism.
inline bool is_special(const CurveType& ct) { return euler_bound(ct) == 2; }

/// Type (1,2) is special by the same arithmetic but sits outside the two
/// cases (2,0) and (0,4) the argument was written for.
inline bool is_extrapolated(const CurveType& ct) { return ct == CurveType(1, 2); }

struct FinitenessVerdict {
  bool finite = false;
  std::optional<BigInt> finite_count;  // number of Higgs bundles, hence local systems up to conjugacy
  std::optional<std::int64_t> d;
  bool extrapolated = false;
};

inline FinitenessVerdict finiteness_verdict(const CurveType& ct) {
  FinitenessVerdict v;
  v.extrapolated = is_extrapolated(ct);
  if (!is_special(ct)) return v;
  const std::vector<HodgeSolution> sols = classify_filtration(ct);
  v.finite = true;
  v.d = sols.front().d;
  v.finite_count = square_root_count(ct.genus(), euler_bound(ct));
  return v;
}

}  // namespace gocert
