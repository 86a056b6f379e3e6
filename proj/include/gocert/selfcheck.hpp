#pragma once

// Exhaustive invariant suites over small place cycles. Each suite reports
// pass/fail, the number of cases examined and the first counterexample.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gocert/certificate.hpp"
#include "gocert/certificate_json.hpp"
#include "gocert/oracles.hpp"
#include "gocert/verify.hpp"

namespace gocert {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::optional<std::string> counterexample;
  std::int64_t millis = 0;
};

struct SelfcheckReport {
  std::vector<SuiteResult> suites;
  std::int64_t millis = 0;

  bool all_passed() const {
    for (const SuiteResult& s : suites)
      if (!s.passed) return false;
    return true;
  }
};

namespace detail {

class SuiteRun {
 public:
  explicit SuiteRun(std::string name) { result_.name = std::move(name); }

  /// Records one case; keeps only the first failure.
  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }
  bool failed() const { return !result_.passed; }
  SuiteResult& result() { return result_; }

 private:
  SuiteResult result_;
};

inline std::string describe_rd(int f, std::uint64_t s_mask) {
  return "f=" + std::to_string(f) + " s_inf=" + to_string(PlaceSet(s_mask));
}

/// Every valid RamificationData with f <= max_f for a fixed p, with the
/// smallest finite ramification count of the right parity.
inline void for_each_rd(int max_f, std::uint64_t p,
                        const std::function<void(int, std::uint64_t, const RamificationData&)>& fn) {
  for (int f = 1; f <= max_f; ++f)
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << f); ++s) {
      const RamificationData rd(PlaceCycle(f), PlaceSet(s), static_cast<std::uint64_t>(std::popcount(s) % 2), p);
      fn(f, s, rd);
    }
}

inline std::uint64_t count_tree(const RamificationData& rd) {
  std::uint64_t n = 1;
  for (const StratumChild& c : strata_children(rd)) n += count_tree(c.induced);
  return n;
}

}  // namespace detail

inline SelfcheckReport selfcheck(int max_f, const std::vector<std::uint64_t>& primes) {
  using detail::describe_rd;
  using detail::SuiteRun;
  using Clock = std::chrono::steady_clock;

  SelfcheckReport report;
  if (max_f <= 0) return report;
  const auto started = Clock::now();
  const std::uint64_t p0 = primes.empty() ? 2 : primes.front();

  auto run = [&](const std::string& name, const std::function<void(SuiteRun&)>& body) {
    SuiteRun s(name);
    const auto t0 = Clock::now();
    body(s);
    s.result().millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    report.suites.push_back(std::move(s.result()));
  };

  run("n_tau_tiling", [&](SuiteRun& s) {
    detail::for_each_rd(max_f, p0, [&](int f, std::uint64_t mask, const RamificationData& rd) {
      if (shimura_dimension(rd) == 0) return;
      int total = 0;
      bool agrees = true;
      for (Place tau : split_places(rd)) {
        const int n = n_tau(rd, tau);
        total += n;
        agrees = agrees && oracle::n_tau(f, mask, tau) == n;
      }
      s.check(total == f && agrees, [&] { return describe_rd(f, mask) + ": sum n_tau = " + std::to_string(total); });
    });
  });

  run("n_tau_unit_characterisation", [&](SuiteRun& s) {
    detail::for_each_rd(max_f, p0, [&](int f, std::uint64_t mask, const RamificationData& rd) {
      if (shimura_dimension(rd) == 0) return;
      bool all_one = true;
      for (Place tau : split_places(rd)) all_one = all_one && n_tau(rd, tau) == 1;
      bool ramified_before_split = false;
      for (Place tau : split_places(rd))
        ramified_before_split = ramified_before_split || rd.s_inf().contains(sigma_pow(rd.cycle(), tau, -1));
      s.check(all_one == !ramified_before_split, [&] { return describe_rd(f, mask); });
    });
  });

  run("dimension_monotone", [&](SuiteRun& s) {
    detail::for_each_rd(max_f, p0, [&](int f, std::uint64_t mask, const RamificationData& rd) {
      for (int extra = 0; extra < f; ++extra) {
        const PlaceSet bigger = rd.s_inf() | PlaceSet{extra};
        const RamificationData rd2(rd.cycle(), bigger, static_cast<std::uint64_t>(bigger.size() % 2), rd.p());
        s.check(shimura_dimension(rd2) <= shimura_dimension(rd),
                [&] { return describe_rd(f, mask) + " + {" + std::to_string(extra) + "}"; });
      }
    });
  });

  run("chain_partition", [&](SuiteRun& s) {
    for (int f = 1; f <= max_f; ++f) {
      const PlaceCycle cycle(f);
      for (std::uint64_t m = 0; m + 1 < (std::uint64_t{1} << f); ++m) {
        const auto chains = decompose_chains(cycle, PlaceSet(m));
        const auto want = oracle::chains(f, m);
        bool ok = chains.size() == want.size();
        PlaceSet covered;
        int total = 0;
        for (std::size_t i = 0; ok && i < chains.size(); ++i) {
          ok = chains[i].head == want[i].head && chains[i].elements == want[i].elements &&
               !PlaceSet(m).contains(cycle.frobenius(chains[i].head)) &&
               !PlaceSet(m).contains(chains[i].successor_below());
          covered = covered | chains[i].members();
          total += chains[i].length();
        }
        ok = ok && covered == PlaceSet(m) && total == PlaceSet(m).size();
        s.check(ok, [&] { return "f=" + std::to_string(f) + " members=" + to_string(PlaceSet(m)); });
      }
    }
  });

  run("strata_parity_growth", [&](SuiteRun& s) {
    for (int f = 1; f <= max_f; ++f)
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f); ++mask)
        for (std::uint64_t fin : {0u, 1u, 2u, 3u}) {
          if ((std::popcount(mask) + fin) % 2 != 0) continue;
          const RamificationData rd(PlaceCycle(f), PlaceSet(mask), fin, p0);
          const std::uint64_t split = split_set(rd).mask();
          for (std::uint64_t t = split;; t = (t - 1) & split) {
            if (t != split) {
              const Stratum st(rd, PlaceSet(t));
              const PlaceSet tp = augmented_set(st);
              const RamificationData child = induced_ramification(st);
              const bool ok = (static_cast<std::uint64_t>(child.s_inf().size()) + child.s_fin_count()) % 2 == 0 &&
                              PlaceSet(t).subset_of(tp) && tp.size() % 2 == 0 &&
                              ((tp - PlaceSet(t)) & (rd.s_inf() | PlaceSet(t))).empty() &&
                              tp.mask() == oracle::augmented(f, mask, t) && child.s_fin_count() == fin &&
                              child.p() == rd.p();
              s.check(ok, [&] { return describe_rd(f, mask) + " fin=" + std::to_string(fin) + " T=" + to_string(PlaceSet(t)); });
            }
            if (t == 0) break;
          }
        }
  });

  run("dimension_descent", [&](SuiteRun& s) {
    detail::for_each_rd(max_f, p0, [&](int f, std::uint64_t mask, const RamificationData& rd) {
      for (const StratumChild& c : strata_children(rd)) {
        const Stratum st(rd, c.t);
        const int n = fiber_dimension(st);
        const int dim = shimura_dimension(rd);
        const int child_dim = shimura_dimension(c.induced);
        const bool ok = n == oracle::odd_chain_count(f, mask, c.t.mask()) &&
                        child_dim == dim - c.t.size() - n && child_dim < dim && n >= 0;
        s.check(ok, [&] { return describe_rd(f, mask) + " T=" + to_string(c.t); });
      }
      // Termination: the recursion bottoms out (dimension strictly drops).
      s.check(detail::count_tree(rd) >= 1, [&] { return describe_rd(f, mask); });
    });
  });

  const int degree_f = std::min(max_f, 5);
  for (std::uint64_t p : primes) {
    run("degree_bound_oracle_p" + std::to_string(p), [&](SuiteRun& s) {
      detail::for_each_rd(degree_f, p, [&](int f, std::uint64_t mask, const RamificationData& rd) {
        if (shimura_dimension(rd) == 0) return;
        const BigInt got = degree_bound(rd);
        const std::uint64_t want = oracle::degree_bound(f, mask, p);
        s.check(got == want, [&] {
          return describe_rd(f, mask) + " p=" + std::to_string(p) + ": engine " + got.str() +
                 ", brute force " + std::to_string(want);
        });
      });
    });
  }

  if (!primes.empty()) {
    run("degree_bound_shape", [&](SuiteRun& s) {
      std::vector<std::uint64_t> sorted = primes;
      std::sort(sorted.begin(), sorted.end());
      for (int f = 1; f <= max_f; ++f)
        for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << f); ++mask) {
          BigInt previous = 0;
          for (std::uint64_t p : sorted) {
            const RamificationData rd(PlaceCycle(f), PlaceSet(mask), static_cast<std::uint64_t>(std::popcount(mask) % 2), p);
            const BigInt bound = degree_bound(rd);
            s.check(bound >= previous, [&] { return describe_rd(f, mask) + " not monotone at p=" + std::to_string(p); });
            previous = bound;
            int tiling = 0;
            for (const HasseConstraint& c : hasse_constraints(rd)) tiling += c.exponent;
            s.check(tiling == f, [&] { return describe_rd(f, mask) + ": exponents do not sum to f"; });
            if (mask == 0) {
              BigInt geometric = 0;
              for (int k = 0; k < f; ++k) geometric += big_pow(p, static_cast<unsigned>(k));
              bool anchor_free = true;
              for (Place a = 0; a < f; ++a) anchor_free = anchor_free && max_degree_sum(rd, a) == geometric;
              s.check(bound == geometric && anchor_free,
                      [&] { return "f=" + std::to_string(f) + " p=" + std::to_string(p) + ": unramified bound " + bound.str(); });
            }
          }
        }
    });
  }

  run("curve_rigidity", [&](SuiteRun& s) {
    for (std::int64_t g = 0; g <= 10; ++g)
      for (std::int64_t n = 0; n <= 10; ++n) {
        if (2 * g - 2 + n <= 0) continue;
        const CurveType ct(g, n);
        const bool expect_special = (g == 2 && n == 0) || (g == 0 && n == 4) || (g == 1 && n == 2);
        const auto sols = classify_filtration(ct);
        const auto want = oracle::hodge_degrees(g, n);
        bool same = sols.size() == want.size();
        for (std::size_t i = 0; same && i < sols.size(); ++i)
          same = sols[i].d == want[i].first && sols[i].higgs_iso == want[i].second;
        const ContradictionVerdict cv = contradiction_check(ct, 1, 0);
        const bool ok = same && is_special(ct) == expect_special &&
                        finiteness_verdict(ct).finite == expect_special &&
                        (cv.conclusion == Conclusion::contradiction) == expect_special &&
                        (sols.empty() == (euler_bound(ct) < 2));
        s.check(ok, [&] { return "curve " + to_string(ct); });
      }
  });

  if (!primes.empty()) {
    run("certificate_replay", [&](SuiteRun& s) {
      const std::vector<CurveType> curves{CurveType(2, 0), CurveType(0, 4), CurveType(1, 2), CurveType(3, 0)};
      for (std::uint64_t p : primes)
        detail::for_each_rd(max_f, p, [&](int f, std::uint64_t mask, const RamificationData& rd) {
          for (const CurveType& ct : curves) {
            const FinitenessCertificate cert = build_certificate(rd, ct);
            const std::string text = serialize(cert);
            const VerifyReport vr = verify_document(text);
            const Verdict want = is_special(ct) ? Verdict::finite : Verdict::inconclusive;
            s.check(vr.ok && cert.verdict == want && serialize(build_certificate(rd, ct)) == text, [&] {
              return describe_rd(f, mask) + " p=" + std::to_string(p) + " curve " + to_string(ct) + ": " +
                     (vr.ok ? std::string("verdict ") + to_string(cert.verdict) : vr.node_path + " " + vr.message);
            });
          }
        });
    });
  }

  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
  return report;
}

inline std::string to_string(const SelfcheckReport& report) {
  std::string out;
  for (const SuiteResult& s : report.suites) {
    out += (s.passed ? "PASS " : "FAIL ") + s.name + " cases=" + std::to_string(s.cases) +
           " ms=" + std::to_string(s.millis);
    if (s.counterexample) out += " counterexample: " + *s.counterexample;
    out += "\n";
  }
  out += "total ms=" + std::to_string(report.millis) + "\n";
  return out;
}

}  // namespace gocert
