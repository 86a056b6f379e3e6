#pragma once

// Brute-force reference computations used by the self-check suites and the
// tests. These work on raw bitmasks and literal definitions and share no
// code with the engines they check.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gocert::oracle {

inline bool has(std::uint64_t mask, int i) { return ((mask >> i) & 1u) != 0; }
inline int back(int f, int i, int k) { return ((i - k) % f + f) % f; }

/// Smallest n >= 1 with sigma^-1 tau, ..., sigma^-(n-1) tau in S and
/// sigma^-n tau not in S, by literal scanning.
inline std::optional<int> n_tau(int f, std::uint64_t s_inf, int tau) {
  if (has(s_inf, tau)) return std::nullopt;
  for (int n = 1; n <= f; ++n)
    if (!has(s_inf, back(f, tau, n))) return n;
  return std::nullopt;
}

struct RawChain {
  int head;
  std::vector<int> elements;  // head, sigma^-1 head, ...
};

/// Maximal runs of `members`, found by rotating to a non-member and sweeping
/// forward once around the cycle. Sorted by head.
inline std::vector<RawChain> chains(int f, std::uint64_t members) {
  int start = -1;
  for (int i = 0; i < f; ++i)
    if (!has(members, i)) start = i;
  if (start < 0) throw std::invalid_argument("no chains on the full cycle");
  std::vector<RawChain> out;
  std::vector<int> run;
  for (int step = 1; step <= f; ++step) {
    const int x = (start + step) % f;
    if (has(members, x)) {
      run.push_back(x);
    } else if (!run.empty()) {
      std::reverse(run.begin(), run.end());
      out.push_back({run.front(), run});
      run.clear();
    }
  }
  std::sort(out.begin(), out.end(), [](const RawChain& a, const RawChain& b) { return a.head < b.head; });
  return out;
}

/// T' by replaying the chain definition.
inline std::uint64_t augmented(int f, std::uint64_t s_inf, std::uint64_t t) {
  std::uint64_t out = 0;
  for (const RawChain& c : chains(f, s_inf | t)) {
    int hits = 0;
    for (int x : c.elements)
      if (has(t, x)) {
        out |= std::uint64_t{1} << x;
        ++hits;
      }
    if (hits % 2 == 1) out |= std::uint64_t{1} << back(f, c.head, static_cast<int>(c.elements.size()));
  }
  return out;
}

inline int odd_chain_count(int f, std::uint64_t s_inf, std::uint64_t t) {
  int count = 0;
  for (const RawChain& c : chains(f, s_inf | t)) {
    int hits = 0;
    for (int x : c.elements) hits += has(t, x) ? 1 : 0;
    count += hits % 2;
  }
  return count;
}

inline std::uint64_t checked_pow(std::uint64_t p, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (std::numeric_limits<std::uint64_t>::max() >> 2) / p)
      throw std::overflow_error("oracle degree cap overflows");
    r *= p;
  }
  return r;
}

/// Maximum of sum_tau deg_tau over integer profiles in [1, p^f] on the split
/// places with deg_anchor = 1 and deg_tau <= p^{n_tau} deg_{sigma^-n tau}
/// for every split tau. Exhaustive backtracking; the only pruning is that a
/// value exceeding an upper bound is abandoned together with all larger ones.
/// p^f caps every maximal degree, the exponents along the cycle summing to f.
inline std::uint64_t max_profile_sum(int f, std::uint64_t s_inf, std::uint64_t p, int anchor) {
  std::vector<int> splits;
  for (int i = 0; i < f; ++i)
    if (!has(s_inf, i)) splits.push_back(i);
  if (splits.empty() || has(s_inf, anchor)) throw std::invalid_argument("bad anchor");
  const std::uint64_t cap = checked_pow(p, f);

  struct Edge {
    int source, target;
    std::uint64_t factor;
  };
  std::vector<Edge> edges;
  for (int tau : splits) {
    const int n = *n_tau(f, s_inf, tau);
    edges.push_back({tau, back(f, tau, n), checked_pow(p, n)});
  }

  // Variable order: anchor first, then any place whose bound is already known.
  std::vector<int> order{anchor};
  std::vector<bool> placed(static_cast<std::size_t>(f), false);
  placed[static_cast<std::size_t>(anchor)] = true;
  while (order.size() < splits.size()) {
    for (const Edge& e : edges)
      if (!placed[static_cast<std::size_t>(e.source)] && placed[static_cast<std::size_t>(e.target)]) {
        placed[static_cast<std::size_t>(e.source)] = true;
        order.push_back(e.source);
      }
  }

  std::vector<std::uint64_t> deg(static_cast<std::size_t>(f), 0);
  std::uint64_t best = 0;
  auto assigned = [&](int i) { return deg[static_cast<std::size_t>(i)] != 0; };

  auto recurse = [&](auto&& self, std::size_t depth, std::uint64_t sum) -> void {
    if (depth == order.size()) {
      best = std::max(best, sum);
      return;
    }
    const int v = order[depth];
    const std::uint64_t hi = depth == 0 ? 1 : cap;  // the anchor is pinned at degree one
    for (std::uint64_t val = 1; val <= hi; ++val) {
      deg[static_cast<std::size_t>(v)] = val;
      bool over = false, under = false;
      for (const Edge& e : edges) {
        if (!assigned(e.source) || !assigned(e.target)) continue;
        if (e.source != v && e.target != v) continue;
        if (deg[static_cast<std::size_t>(e.source)] > e.factor * deg[static_cast<std::size_t>(e.target)]) {
          // v as source: larger values only get worse.
          if (e.source == v && e.target != v) over = true;
          else under = true;
        }
      }
      if (over) break;
      if (!under) self(self, depth + 1, sum + val);
    }
    deg[static_cast<std::size_t>(v)] = 0;
  };
  recurse(recurse, 0, 0);
  return best;
}

inline std::uint64_t degree_bound(int f, std::uint64_t s_inf, std::uint64_t p) {
  std::uint64_t best = 0;
  for (int a = 0; a < f; ++a)
    if (!has(s_inf, a)) best = std::max(best, max_profile_sum(f, s_inf, p, a));
  return best;
}

/// Admissible deg Fil^1 values by scanning d over [1, 2g - 2 + n].
inline std::vector<std::pair<std::int64_t, bool>> hodge_degrees(std::int64_t g, std::int64_t n) {
  std::vector<std::pair<std::int64_t, bool>> out;
  const std::int64_t omega = 2 * g - 2 + n;
  for (std::int64_t d = 1; d <= omega; ++d)
    if (d <= omega - d) out.emplace_back(d, d == omega - d);
  return out;
}

}  // namespace gocert::oracle
