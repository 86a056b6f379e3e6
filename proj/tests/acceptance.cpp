// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails or exceeds its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gocert/gocert.hpp"
#include "gocert/oracles.hpp"
#include "mutations.hpp"

namespace {

using namespace gocert;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Criterion {
 public:
  explicit Criterion(Outcome& out) : out_(out) {}
  void require(bool cond, const std::string& what) {
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }

 private:
  Outcome& out_;
};

RamificationData rd_for(int f, std::uint64_t mask, std::uint64_t fin, std::uint64_t p) {
  return RamificationData(PlaceCycle(f), PlaceSet(mask), fin, p);
}

Outcome genus_two_rigidity() {
  Outcome out;
  Criterion c(out);
  const auto g2 = finiteness_verdict(CurveType(2, 0));
  c.require(g2.finite, "(2,0) not finite");
  c.require(g2.finite_count == BigInt(16), "(2,0) count is not 16");
  c.require(g2.d == 1, "(2,0) does not force d = 1");
  const auto sols = classify_filtration(CurveType(2, 0));
  c.require(sols.size() == 1 && sols[0].d == 1 && sols[0].higgs_iso, "(2,0) filtration not {d=1, iso}");
  const auto sphere = finiteness_verdict(CurveType(0, 4));
  c.require(sphere.finite, "(0,4) not finite");
  c.require(sphere.d == 1, "(0,4) does not force d = 1");
  return out;
}

Outcome strata_parity() {
  Outcome out;
  Criterion c(out);
  std::uint64_t cases = 0;
  for (int f = 1; f <= 8; ++f)
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << f); ++s)
      for (std::uint64_t fin : {0u, 1u, 2u, 3u}) {
        if ((std::popcount(s) + fin) % 2 != 0) continue;
        const RamificationData rd = rd_for(f, s, fin, 3);
        const PlaceSet split = split_set(rd);
        for (std::uint64_t t = 0; t < (std::uint64_t{1} << f); ++t) {
          if (!PlaceSet(t).subset_of(split) || PlaceSet(t) == split) continue;
          ++cases;
          const Stratum st(rd, PlaceSet(t));
          const PlaceSet tp = augmented_set(st);
          const RamificationData child = induced_ramification(st);
          const std::string where = "f=" + std::to_string(f) + " s=" + to_string(PlaceSet(s)) + " T=" + to_string(PlaceSet(t));
          c.require((child.s_inf().size() + child.s_fin_count()) % 2 == 0, "odd |S(T)| at " + where);
          c.require(PlaceSet(t).subset_of(tp), "T not in T' at " + where);
          c.require(tp.size() % 2 == 0, "|T'| odd at " + where);
          c.require(((tp - PlaceSet(t)) & (rd.s_inf() | PlaceSet(t))).empty(), "T'-T meets S u T at " + where);
          c.require(tp.mask() == oracle::augmented(f, s, t), "T' disagrees with definition replay at " + where);
        }
      }
  out.detail = out.ok ? std::to_string(cases) + " strata" : out.detail;
  return out;
}

std::uint64_t tree_size(const RamificationData& rd, Criterion& c) {
  std::uint64_t n = 1;
  for (const StratumChild& ch : strata_children(rd)) {
    c.require(shimura_dimension(ch.induced) < shimura_dimension(rd), "descent does not decrease dimension");
    n += tree_size(ch.induced, c);
  }
  return n;
}

Outcome dimension_descent() {
  Outcome out;
  Criterion c(out);
  std::uint64_t cases = 0, nodes = 0;
  for (int f = 1; f <= 8; ++f)
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << f); ++s) {
      const RamificationData rd = rd_for(f, s, static_cast<std::uint64_t>(std::popcount(s) % 2), 2);
      for (const StratumChild& ch : strata_children(rd)) {
        ++cases;
        const int n = oracle::odd_chain_count(f, s, ch.t.mask());
        const int dim = shimura_dimension(rd);
        const int child = shimura_dimension(ch.induced);
        const std::string where = "f=" + std::to_string(f) + " s=" + to_string(PlaceSet(s)) + " T=" + to_string(ch.t);
        c.require(child == dim - ch.t.size() - n, "dimension formula fails at " + where);
        c.require(fiber_dimension(Stratum(rd, ch.t)) == n, "N differs from odd chain count at " + where);
        c.require(child < dim, "no descent at " + where);
      }
      nodes += tree_size(rd, c);
    }
  if (out.ok) out.detail = std::to_string(cases) + " strata, " + std::to_string(nodes) + " tree nodes";
  return out;
}

Outcome n_tau_tiling() {
  Outcome out;
  Criterion c(out);
  for (int f = 1; f <= 8; ++f)
    for (std::uint64_t s = 0; s + 1 < (std::uint64_t{1} << f); ++s) {
      const RamificationData rd = rd_for(f, s, static_cast<std::uint64_t>(std::popcount(s) % 2), 2);
      int total = 0;
      for (Place tau : split_places(rd)) total += n_tau(rd, tau);
      c.require(total == f, "sum n_tau != f at f=" + std::to_string(f) + " s=" + to_string(PlaceSet(s)));
    }
  return out;
}

Outcome degree_bound_oracle() {
  Outcome out;
  Criterion c(out);
  std::uint64_t cases = 0;
  for (std::uint64_t p : {2u, 3u, 5u})
    for (int f = 1; f <= 5; ++f)
      for (std::uint64_t s = 0; s + 1 < (std::uint64_t{1} << f); ++s) {
        ++cases;
        const BigInt got = degree_bound(rd_for(f, s, static_cast<std::uint64_t>(std::popcount(s) % 2), p));
        const std::uint64_t want = oracle::degree_bound(f, s, p);
        c.require(got == want, "p=" + std::to_string(p) + " f=" + std::to_string(f) + " s=" + to_string(PlaceSet(s)) +
                                   ": engine " + got.str() + " vs brute force " + std::to_string(want));
      }
  if (out.ok) out.detail = std::to_string(cases) + " configurations";
  return out;
}

Outcome contradiction_ledger() {
  Outcome out;
  Criterion c(out);
  for (const CurveType ct : {CurveType(2, 0), CurveType(0, 4)}) {
    const auto v = contradiction_check(ct, 1, 0);
    c.require(v.deg_tangent == -2 && v.deg_hom == -2 && v.conclusion == Conclusion::contradiction,
              "no -2 = -2 contradiction for " + to_string(ct));
  }
  for (std::int64_t g = 0; g <= 10; ++g)
    for (std::int64_t n = 0; n <= 10; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const bool contra = contradiction_check(CurveType(g, n), 1, 0).conclusion == Conclusion::contradiction;
      c.require(contra == (2 * g - 2 + n == 2), "mismatch at " + to_string(CurveType(g, n)));
    }
  return out;
}

Outcome determinism_and_verification() {
  Outcome out;
  Criterion c(out);
  std::mt19937_64 rng(20261016);
  const std::vector<std::uint64_t> primes{2, 3, 5, 7};
  const std::vector<std::pair<std::int64_t, std::int64_t>> curves{{2, 0}, {0, 4}, {3, 0}, {1, 2}};
  std::vector<AnalysisConfig> configs;
  while (configs.size() < 20) {
    AnalysisConfig cfg;
    cfg.f = 1 + static_cast<std::int64_t>(rng() % 6);
    cfg.p = primes[rng() % primes.size()];
    const std::uint64_t mask = rng() % (std::uint64_t{1} << cfg.f);
    for (std::int64_t i = 0; i < cfg.f; ++i)
      if ((mask >> i) & 1) cfg.ram_inf.push_back(i);
    cfg.ram_fin = cfg.ram_inf.size() % 2 + 2 * (rng() % 2);
    const auto& [g, n] = curves[rng() % curves.size()];
    cfg.g = g;
    cfg.n = n;
    configs.push_back(cfg);
  }

  std::size_t rejected = 0, mutations = 0;
  for (std::size_t k = 0; k < configs.size(); ++k) {
    const std::string first = serialize(build_certificate(configs[k]));
    for (int run = 1; run < 10; ++run)
      c.require(serialize(build_certificate(configs[k])) == first, "run " + std::to_string(run) + " differs for config " + std::to_string(k));
    const VerifyReport report = verify_document(first);
    c.require(report.ok, "config " + std::to_string(k) + " not verified: " + report.message);
  }

  // A 5-dimensional unramified case gives a tree with every node kind.
  AnalysisConfig big;
  big.p = 3;
  big.f = 5;
  big.g = 2;
  big.n = 0;
  const Json doc = to_json(build_certificate(big));
  for (const auto& m : testing::single_field_mutations(doc, 50)) {
    ++mutations;
    const VerifyReport report = verify_document(m.document.dump());
    if (!report.ok) ++rejected;
    c.require(!report.ok, "mutation " + m.label + " accepted");
  }
  if (out.ok) out.detail = "20 configs x 10 runs, " + std::to_string(rejected) + "/" + std::to_string(mutations) + " mutations rejected";
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;
  };
  const std::vector<Entry> criteria{
      {"1 genus-2 rigidity (count 16, d = 1; (0,4) d = 1)", genus_two_rigidity, 1},
      {"2 S(T) parity and growth, f <= 8", strata_parity, 30},
      {"3 dimension descent and termination, f <= 8", dimension_descent, 30},
      {"4 n_tau tiling, f <= 8", n_tau_tiling, 5},
      {"5 degree bound equals brute force, p in {2,3,5}, f <= 5", degree_bound_oracle, 60},
      {"6 contradiction ledger, g,n <= 10", contradiction_ledger, 1},
      {"7 determinism (20 configs x 10 runs) and 50 mutations rejected", determinism_and_verification, 60},
  };

  int failures = 0;
  for (const Entry& e : criteria) {
    const auto t0 = Clock::now();
    Outcome o = e.run();
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (o.ok && secs >= e.budget_seconds) {
      o.ok = false;
      o.detail = "exceeded time budget";
    }
    std::printf("%s criterion %s [%.3f s / %.0f s]%s%s\n", o.ok ? "PASS" : "FAIL", e.name, secs, e.budget_seconds,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    failures += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
