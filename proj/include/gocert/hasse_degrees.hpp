#pragma once

// Degree bounds from partial Hasse invariants. On a generically ordinary
// curve every h_tau : omega_tau -> omega_{sigma^-n tau}^{p^n} is non-zero,
// so deg omega_tau <= p^{n_tau} * deg omega_{sigma^-n tau}. Pinning one anchor
// place at degree one bounds every other degree.

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gocert/place_cycle.hpp"

namespace gocert {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

struct HasseConstraint {
  Place source = 0;
  Place target = 0;
  int exponent = 1;

  friend bool operator==(const HasseConstraint&, const HasseConstraint&) = default;
};

/// One constraint per split place, ordered by source.
inline std::vector<HasseConstraint> hasse_constraints(const RamificationData& rd) {
  if (shimura_dimension(rd) == 0)
    throw DomainError("no partial Hasse invariants: every archimedean place is ramified");
  std::vector<HasseConstraint> out;
  for (Place tau : split_places(rd)) {
    const int n = n_tau(rd, tau);
    out.push_back({tau, sigma_pow(rd.cycle(), tau, -n), n});
  }
  return out;
}

/// Degrees of the pulled-back omega_tau, one per split place, all positive.
class DegreeProfile {
 public:
  DegreeProfile() = default;
  explicit DegreeProfile(std::map<Place, BigInt> degrees) : degrees_(std::move(degrees)) {
    for (const auto& [tau, deg] : degrees_)
      if (deg < 1)
        throw DomainError("degree of omega_" + std::to_string(tau) + " must be positive, got " +
                          deg.str());
  }

  const std::map<Place, BigInt>& degrees() const { return degrees_; }
  const BigInt& at(Place tau) const {
    const auto it = degrees_.find(tau);
    if (it == degrees_.end()) throw DomainError("no degree recorded for place " + std::to_string(tau));
    return it->second;
  }
  BigInt total() const {
    BigInt sum = 0;
    for (const auto& [tau, deg] : degrees_) sum += deg;
    return sum;
  }

 private:
  std::map<Place, BigInt> degrees_;
};

inline bool satisfies(const DegreeProfile& profile, const RamificationData& rd) {
  if (profile.degrees().size() != static_cast<std::size_t>(shimura_dimension(rd))) return false;
  for (const HasseConstraint& c : hasse_constraints(rd)) {
    if (profile.degrees().count(c.source) == 0 || profile.degrees().count(c.target) == 0) return false;
    if (profile.at(c.source) > big_pow(rd.p(), static_cast<unsigned>(c.exponent)) * profile.at(c.target))
      return false;
  }
  return true;
}

/// The pointwise largest admissible profile with degree one at `anchor`.
/// Walking along sigma from the anchor, each split place is bounded by p^n
/// times the previous split place, and every bound is attained at once.
inline DegreeProfile maximal_profile(const RamificationData& rd, Place anchor) {
  if (!rd.cycle().valid(anchor) || !split_set(rd).contains(anchor))
    throw DomainError("anchor " + std::to_string(anchor) + " is not a split place");
  const std::vector<Place> splits = split_places(rd);
  const auto start = std::find(splits.begin(), splits.end(), anchor) - splits.begin();

  std::map<Place, BigInt> degrees;
  BigInt running = 1;
  degrees[anchor] = running;
  for (std::size_t k = 1; k < splits.size(); ++k) {
    const Place tau = splits[(static_cast<std::size_t>(start) + k) % splits.size()];
    running *= big_pow(rd.p(), static_cast<unsigned>(n_tau(rd, tau)));
    degrees[tau] = running;
  }
  return DegreeProfile(std::move(degrees));
}

inline BigInt max_degree_sum(const RamificationData& rd, Place anchor) {
  return maximal_profile(rd, anchor).total();
}

/// Upper bound on sum_tau deg f*omega_tau for a generically ordinary curve,
/// uniform over the (unknown) anchor place.
inline BigInt degree_bound(const RamificationData& rd) {
  if (shimura_dimension(rd) == 0)
    throw DomainError("degree bound undefined: every archimedean place is ramified");
  BigInt best = 0;
  for (Place anchor : split_places(rd)) {
    BigInt s = max_degree_sum(rd, anchor);
    if (s > best) best = std::move(s);
  }
  return best;
}

/// The same bound read through [(x) omega_tau^2] = [Omega^top].
inline BigInt top_form_degree_bound(const RamificationData& rd) { return 2 * degree_bound(rd); }

}  // namespace gocert
