#pragma once

// Archimedean places of a totally real field F inert at p, viewed as the
// cyclic set Z/f with Frobenius sigma(i) = i + 1, together with the
// ramification datum of a quaternion algebra over F.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include "gocert/error.hpp"

namespace gocert {

using Place = int;

/// Largest supported [F:Q]; place sets are stored as 64-bit masks.
inline constexpr int kMaxDegree = 64;

/// A subset of the places 0..f-1, stored as a bitmask.
class PlaceSet {
 public:
  constexpr PlaceSet() = default;
  constexpr explicit PlaceSet(std::uint64_t mask) : mask_(mask) {}
  PlaceSet(std::initializer_list<Place> places) {
    for (Place p : places) insert(p);
  }

  /// All places of a cycle of length f.
  static constexpr PlaceSet full(int f) {
    return PlaceSet(f >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(Place p) const {
    return p >= 0 && p < 64 && ((mask_ >> p) & 1u) != 0;
  }
  void insert(Place p) {
    if (p < 0 || p >= 64) throw DomainError("place index out of range: " + std::to_string(p));
    mask_ |= std::uint64_t{1} << p;
  }
  constexpr bool subset_of(PlaceSet other) const { return (mask_ & ~other.mask_) == 0; }

  /// Ascending list of members.
  std::vector<Place> elements() const {
    std::vector<Place> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend constexpr PlaceSet operator|(PlaceSet a, PlaceSet b) { return PlaceSet(a.mask_ | b.mask_); }
  friend constexpr PlaceSet operator&(PlaceSet a, PlaceSet b) { return PlaceSet(a.mask_ & b.mask_); }
  friend constexpr PlaceSet operator-(PlaceSet a, PlaceSet b) { return PlaceSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(PlaceSet, PlaceSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

inline std::string to_string(PlaceSet s) {
  std::string out = "{";
  bool first = true;
  for (Place p : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

/// The archimedean places with the Frobenius action. A single f-cycle, which
/// is what inertness of p means at the level of places.
class PlaceCycle {
 public:
  explicit PlaceCycle(int f) : f_(f) {
    if (f < 1) throw DomainError("[F:Q] must be at least 1, got " + std::to_string(f));
    if (f > kMaxDegree)
      throw DomainError("[F:Q] = " + std::to_string(f) + " exceeds supported maximum " +
                        std::to_string(kMaxDegree));
  }

  int degree() const { return f_; }
  PlaceSet all() const { return PlaceSet::full(f_); }
  bool valid(Place i) const { return i >= 0 && i < f_; }
  Place frobenius(Place i) const { return (i + 1) % f_; }

  friend bool operator==(const PlaceCycle&, const PlaceCycle&) = default;

 private:
  int f_;
};

/// sigma^k applied to place i; k may be negative.
inline Place sigma_pow(const PlaceCycle& cycle, Place i, std::int64_t k) {
  const std::int64_t f = cycle.degree();
  return static_cast<Place>(((static_cast<std::int64_t>(i) + k) % f + f) % f);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  return boost::multiprecision::miller_rabin_test(boost::multiprecision::cpp_int(n), 25);
}

/// Input datum of a quaternionic Shimura variety: the place cycle, the
/// archimedean ramification S_inf, the number of finite ramified places
/// (p excluded) and the prime p.
class RamificationData {
 public:
  RamificationData(PlaceCycle cycle, PlaceSet s_inf, std::uint64_t s_fin_count, std::uint64_t p)
      : cycle_(cycle), s_inf_(s_inf), s_fin_count_(s_fin_count), p_(p) {
    if (!s_inf.subset_of(cycle.all()))
      throw DomainError("ramified place outside 0.." + std::to_string(cycle.degree() - 1) +
                        ": " + to_string(s_inf));
    if ((static_cast<std::uint64_t>(s_inf.size()) + s_fin_count) % 2 != 0)
      throw DomainError("quaternion algebra must ramify at an even number of places; |S_inf| = " +
                        std::to_string(s_inf.size()) + ", finite = " + std::to_string(s_fin_count));
    if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  }

  const PlaceCycle& cycle() const { return cycle_; }
  int degree() const { return cycle_.degree(); }
  PlaceSet s_inf() const { return s_inf_; }
  std::uint64_t s_fin_count() const { return s_fin_count_; }
  std::uint64_t p() const { return p_; }

  friend bool operator==(const RamificationData&, const RamificationData&) = default;

 private:
  PlaceCycle cycle_;
  PlaceSet s_inf_;
  std::uint64_t s_fin_count_;
  std::uint64_t p_;
};

/// Sigma_inf - S_inf as a set.
inline PlaceSet split_set(const RamificationData& rd) { return rd.cycle().all() - rd.s_inf(); }

/// Sigma_inf - S_inf in ascending order.
inline std::vector<Place> split_places(const RamificationData& rd) { return split_set(rd).elements(); }

inline int shimura_dimension(const RamificationData& rd) { return split_set(rd).size(); }

/// n_tau: the distance from a split place tau back (against sigma) to the
/// previous split place. The places strictly in between are all ramified.
inline int n_tau(const RamificationData& rd, Place tau) {
  if (!rd.cycle().valid(tau)) throw DomainError("place out of range: " + std::to_string(tau));
  const PlaceSet split = split_set(rd);
  if (split.empty()) throw DomainError("n_tau undefined: every archimedean place is ramified");
  if (!split.contains(tau))
    throw DomainError("n_tau undefined: place " + std::to_string(tau) + " is ramified");

  const int f = rd.degree();
  const std::vector<Place> splits = split.elements();
  const auto it = std::lower_bound(splits.begin(), splits.end(), tau);
  if (it == splits.begin()) return tau - splits.back() + f;  // wraps; f when tau is the only split place
  return tau - *(it - 1);
}

}  // namespace gocert
