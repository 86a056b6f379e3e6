#pragma once

// Rank/degree bookkeeping for the isomonodromy contradiction. E is the
// pulled-back rank-two de Rham bundle with Hodge line Fil^1; the Atiyah
// sequence 0 -> End(E) -> At(E) -> T_X -> 0 classifies connections on E.
// For punctured types T_X means the logarithmic tangent sheaf T_X(-D).

#include <cstdint>
#include <string>

#include "gocert/vhs_rigidity.hpp"

namespace gocert {

struct BundleClass {
  std::int64_t rank;
  std::int64_t degree;
  CurveType context;

  BundleClass(std::int64_t r, std::int64_t deg, CurveType ct) : rank(r), degree(deg), context(ct) {
    if (r < 1) throw DomainError("bundle rank must be positive, got " + std::to_string(r));
  }

  friend bool operator==(const BundleClass&, const BundleClass&) = default;
};

/// 0 -> sub -> total -> quotient -> 0, with rank and degree additive.
class ExactTriple {
 public:
  ExactTriple(BundleClass sub, BundleClass total, BundleClass quotient)
      : sub_(sub), total_(total), quotient_(quotient) {
    if (!(sub.context == total.context && total.context == quotient.context))
      throw DomainError("exact triple mixes bundles on different curves");
    if (total.rank != sub.rank + quotient.rank)
      throw DomainError("rank is not additive: " + std::to_string(total.rank) +
                        " != " + std::to_string(sub.rank) + " + " + std::to_string(quotient.rank));
    if (total.degree != sub.degree + quotient.degree)
      throw DomainError("degree is not additive: " + std::to_string(total.degree) + " != " +
                        std::to_string(sub.degree) + " + " + std::to_string(quotient.degree));
  }

  const BundleClass& sub() const { return sub_; }
  const BundleClass& total() const { return total_; }
  const BundleClass& quotient() const { return quotient_; }

 private:
  BundleClass sub_;
  BundleClass total_;
  BundleClass quotient_;
};

/// deg Hom(Fil^1, E/Fil^1) = deg(E/Fil^1) - deg Fil^1 for rank-two E.
inline std::int64_t hom_degree(std::int64_t fil1_deg, std::int64_t det_deg) {
  return det_deg - 2 * fil1_deg;
}

/// deg T_X(-D) = 2 - 2g - n.
inline std::int64_t tangent_degree(const CurveType& ct) {
  return 2 - 2 * ct.genus() - ct.punctures();
}

struct AtiyahClasses {
  BundleClass end;
  BundleClass atiyah;
  ExactTriple sequence;  // End(E) -> At(E) -> T_X
};

inline AtiyahClasses atiyah_classes(const BundleClass& e) {
  const CurveType& ct = e.context;
  BundleClass end(e.rank * e.rank, 0, ct);
  BundleClass tangent(1, tangent_degree(ct), ct);
  BundleClass atiyah(end.rank + tangent.rank, end.degree + tangent.degree, ct);
  ExactTriple seq(end, atiyah, tangent);
  return {end, atiyah, seq};
}

/// Riemann-Roch for a line bundle: chi = deg + 1 - g.
inline std::int64_t rr_chi(std::int64_t g, std::int64_t degree) {
  if (g < 0) throw DomainError("genus must be non-negative");
  return degree + 1 - g;
}

enum class Conclusion { contradiction, inconclusive };

inline const char* to_string(Conclusion c) {
  return c == Conclusion::contradiction ? "contradiction" : "inconclusive";
}

struct ContradictionVerdict {
  std::int64_t deg_tangent = 0;
  std::int64_t deg_hom = 0;
  bool forced_iso = false;
  Conclusion conclusion = Conclusion::inconclusive;

  friend bool operator==(const ContradictionVerdict&, const ContradictionVerdict&) = default;
};

/// The Kodaira-Spencer map gives a non-zero T_X -> Hom(Fil^1, E/Fil^1)
/// whenever deg Fil^1 >= 1. Equal degrees make it an isomorphism, hence an
/// isomorphism on H^1, while a deformation preserving the filtration must
/// send the isomonodromy class to zero there.
inline ContradictionVerdict contradiction_check(const CurveType& ct, std::int64_t fil1_deg,
                                                std::int64_t det_deg) {
  ContradictionVerdict v;
  v.deg_tangent = tangent_degree(ct);
  v.deg_hom = hom_degree(fil1_deg, det_deg);
  v.forced_iso = fil1_deg >= 1 && v.deg_tangent == v.deg_hom;
  v.conclusion = v.forced_iso ? Conclusion::contradiction : Conclusion::inconclusive;
  return v;
}

}  // namespace gocert
