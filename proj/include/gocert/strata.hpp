#pragma once

// Goren-Oort stratum combinatorics: chain decomposition of S_inf u T, the
// augmented set T', the ramification datum S(T) of the smaller Shimura
// variety, and the dimension N of the (P^1)^N fibres.

#include <vector>

#include "gocert/place_cycle.hpp"

namespace gocert {

/// A stratum T inside the split places of rd. T must be a proper subset.
class Stratum {
 public:
  Stratum(RamificationData rd, PlaceSet t) : rd_(std::move(rd)), t_(t) {
    const PlaceSet split = split_set(rd_);
    if (!t.subset_of(split))
      throw DomainError("stratum set " + to_string(t) + " is not contained in the split places " +
                        to_string(split));
    if (t == split)
      throw DomainError("stratum set must be a proper subset of the split places " +
                        to_string(split));
  }

  const RamificationData& rd() const { return rd_; }
  PlaceSet t() const { return t_; }

 private:
  RamificationData rd_;
  PlaceSet t_;
};

/// A maximal sigma-consecutive run {head, sigma^-1 head, ..., sigma^-m head}.
struct Chain {
  PlaceCycle cycle{1};
  Place head = 0;
  std::vector<Place> elements;  // head first, walking against sigma

  int length() const { return static_cast<int>(elements.size()); }
  PlaceSet members() const {
    PlaceSet s;
    for (Place p : elements) s.insert(p);
    return s;
  }
  /// sigma^{-m-1}(head): the first place below the chain.
  Place successor_below() const { return sigma_pow(cycle, head, -length()); }

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.cycle == b.cycle && a.head == b.head && a.elements == b.elements;
  }
};

/// Splits `members` into maximal runs, ordered by ascending head.
inline std::vector<Chain> decompose_chains(const PlaceCycle& cycle, PlaceSet members) {
  if (!members.subset_of(cycle.all()))
    throw DomainError("chain members outside the place cycle: " + to_string(members));
  if (members == cycle.all())
    throw DomainError("chain decomposition undefined on the full place cycle");

  std::vector<Chain> chains;
  for (Place head : members.elements()) {
    if (members.contains(cycle.frobenius(head))) continue;
    Chain c{cycle, head, {}};
    for (Place x = head; members.contains(x); x = sigma_pow(cycle, x, -1)) c.elements.push_back(x);
    chains.push_back(std::move(c));
  }
  return chains;
}

inline std::vector<Chain> decompose_chains(const Stratum& st) {
  return decompose_chains(st.rd().cycle(), st.rd().s_inf() | st.t());
}

/// C' for one chain: C n T when |C n T| is even, otherwise C n T together
/// with the place just below the chain.
inline PlaceSet chain_augment(const Chain& c, PlaceSet t) {
  PlaceSet out = c.members() & t;
  if (out.size() % 2 == 1) out.insert(c.successor_below());
  return out;
}

/// T' = union of the augmented chains.
inline PlaceSet augmented_set(const Stratum& st) {
  PlaceSet out;
  for (const Chain& c : decompose_chains(st)) out = out | chain_augment(c, st.t());
  return out;
}

/// S(T) = S u T'. Finite ramification and p are unchanged.
inline RamificationData induced_ramification(const Stratum& st) {
  const RamificationData& rd = st.rd();
  return RamificationData(rd.cycle(), rd.s_inf() | augmented_set(st), rd.s_fin_count(), rd.p());
}

/// N with S_{k,T} a (P^1)^N-bundle over the Shimura variety of S(T), from
/// dim S_{k,T} = dim S_k - |T|.
inline int fiber_dimension(const Stratum& st) {
  return (shimura_dimension(st.rd()) - st.t().size()) -
         shimura_dimension(induced_ramification(st));
}

struct StratumChild {
  PlaceSet t;
  RamificationData induced;
};

/// One entry per non-empty proper subset T of the split places, in
/// ascending bitmask order.
inline std::vector<StratumChild> strata_children(const RamificationData& rd) {
  const std::uint64_t split = split_set(rd).mask();
  std::vector<StratumChild> out;
  // Ascending enumeration of the submasks of `split`.
  for (std::uint64_t sub = (0 - split) & split; sub != 0 && sub != split;
       sub = (sub - split) & split) {
    Stratum st(rd, PlaceSet(sub));
    out.push_back({PlaceSet(sub), induced_ramification(st)});
  }
  return out;
}

}  // namespace gocert
