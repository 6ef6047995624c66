// Acceptance suite: the full desk-scale reproduction, one line per
// criterion. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rctour/catalog.hpp"
#include "rctour/constructions.hpp"
#include "rctour/enumerate.hpp"
#include "rctour/json_io.hpp"
#include "rctour/solver.hpp"
#include "support/oracles.hpp"

using namespace rctour;

namespace {

struct Check {
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) failures.push_back(what);
  }
  void require_under(double seconds, double budget, const std::string& what) {
    if (seconds > budget) {
      std::ostringstream os;
      os << what << " took " << seconds << "s, budget " << budget << "s";
      failures.push_back(os.str());
    }
  }
};

// [1] every order in 6..40 yields a strong tournament, rainbow connected on
// 2 colors, rc pinned to exactly 2
void criterion_theorem3(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report = verify_theorem3(40, /*threads=*/0);
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  c.require(report.ok, "theorem3 report not ok");
  c.require(report.doc["instances"].size() == 35, "expected 35 instances");
  for (const Json& inst : report.doc["instances"]) {
    c.require(inst["pass"] == true,
              "instance n=" + inst["n"].dump() + " failed");
    c.require(inst["rc"] == 2, "rc != 2 at n=" + inst["n"].dump());
  }
  c.require_under(secs, 5.0, "verify theorem3 --n-max 40");
}

// [2] the three fixture tournaments match arc-for-arc and verify
void criterion_fixtures(Check& c) {
  const std::set<Arc> n6_dashed{{0, 1}, {0, 3}, {1, 4}, {2, 0},
                                {2, 3}, {4, 2}, {5, 0}};
  const std::set<Arc> n6_solid{{1, 2}, {3, 1}, {3, 4}, {3, 5},
                               {4, 5}, {4, 0}, {5, 1}, {5, 2}};
  const std::set<Arc> c7_dashed{{0, 1}, {0, 2}, {1, 5}, {2, 3},
                                {2, 4}, {4, 1}, {4, 5}, {4, 6},
                                {6, 0}, {6, 1}, {6, 3}};

  auto classes = [](const ColoredDigraph& cd) {
    std::pair<std::set<Arc>, std::set<Arc>> out;
    for (const Arc& a : cd.digraph.arcs())
      (cd.coloring.color_of(a) == 0 ? out.first : out.second).insert(a);
    return out;
  };

  ColoredDigraph n6 = rc2_construction(6);
  auto [d6, s6] = classes(n6);
  c.require(d6 == n6_dashed, "n=6 dashed class mismatch");
  c.require(s6 == n6_solid, "n=6 solid class mismatch");

  ColoredDigraph n7 = rc2_construction(7);
  auto [d7, s7] = classes(n7);
  c.require(d7 == c7_dashed, "n=7 color-0 class != the 11 dashed arcs");
  c.require(s7.size() == 10, "n=7 solid class size");

  ColoredDigraph n8 = rc2_construction(8);
  std::set<int> vout, vin;
  for (int i = 0; i < 7; ++i) {
    if (n8.digraph.has_arc(7, i)) vout.insert(i);
    if (n8.digraph.has_arc(i, 7)) vin.insert(i);
  }
  c.require(vout == std::set<int>{0, 2, 4, 6}, "n=8 out-neighborhood of v");
  c.require(vin == std::set<int>{1, 3, 5}, "n=8 in-neighborhood of v");

  for (int n : {6, 7, 8}) {
    c.require(is_rainbow_connected(rc2_construction(n)).connected,
              "fixture n=" + std::to_string(n) + " not rainbow connected");
  }
}

// [3] closed-form witness paths validate for odd 7..41 and even 8..40, with
// the tail-index emendation flagged on exactly the even orders
void criterion_proof_certification(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  for (int n = 7; n <= 41; ++n) {
    ProofCertificate pc = proof_certificate(n);
    ValidationReport report =
        validate_certificate(rc2_construction(n), pc.entries);
    c.require(report.violations.empty(),
              "violations at n=" + std::to_string(n));
    c.require(report.uncovered.empty(),
              "uncovered pairs at n=" + std::to_string(n));
    int emendations = 0;
    for (const ProofNote& note : pc.notes)
      if (note.kind == "emendation") ++emendations;
    c.require(emendations == (n % 2 == 0 ? 1 : 0),
              "emendation flag wrong at n=" + std::to_string(n));
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  c.require_under(secs, 5.0, "proof certification 7..41");
}

// [4] orders 4 and 5 exhausted: no strong tournament admits a
// rainbow-connecting 2-coloring; rc is 3 everywhere at order 4 and exactly
// {3, 4} at order 5
void criterion_small_cases(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report = verify_small_cases(/*threads=*/0);
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  c.require(report.ok, "small-cases report not ok");
  const Json& n4 = report.doc["strata"][0];
  const Json& n5 = report.doc["strata"][1];
  c.require(n4["strong"] == 24, "24 strong tournaments at order 4");
  c.require(n5["strong"] == 544, "544 strong tournaments at order 5");
  c.require(n4["rc_histogram"].size() == 1 && n4["rc_histogram"]["3"] == 24,
            "order 4: every strong tournament has rc exactly 3");
  c.require(n5["rc_histogram"].size() == 2 &&
                n5["rc_histogram"].contains("3") &&
                n5["rc_histogram"].contains("4"),
            "order 5: rc values realized are exactly {3, 4}");
  c.require(n4["rainbow_two_colorings_found"] == 0 &&
                n5["rainbow_two_colorings_found"] == 0,
            "no rainbow-connecting 2-coloring may exist");

  // the report is not a cache: order-4 values re-derive from scratch
  for (const Json& inst : n4["instances"]) {
    Digraph d = TournamentEnumerator::tournament_from_mask(
        4, inst["mask"].get<std::uint64_t>());
    c.require(rc_exact(d).value == inst["rc"].get<int>(),
              "order-4 rc mismatch on re-run");
    ColoredDigraph witness = colored_from_json(inst["witness"]);
    c.require(is_rainbow_connected(witness).connected,
              "stored order-4 witness does not re-validate");
  }
  c.require_under(secs, 600.0, "verify small-cases");
}

// [5] 2 <= rc <= n-1: exhaustive at order 5, sampled at order 6
void criterion_band(Check& c) {
  VerificationReport five =
      verify_theorem1_band(5, 0, 0, /*exhaustive=*/true, /*threads=*/0);
  c.require(five.ok, "order-5 exhaustive band not ok");
  c.require(five.doc["aggregate"]["strong"] == 544, "order-5 strong count");
  c.require(five.doc["aggregate"]["rc_min"].get<int>() >= 2 &&
                five.doc["aggregate"]["rc_max"].get<int>() <= 4,
            "order-5 band bounds");

  VerificationReport six =
      verify_theorem1_band(6, 100, /*seed=*/1, false, /*threads=*/0);
  c.require(six.ok, "order-6 sampled band not ok");
  c.require(six.doc["aggregate"]["rc_min"].get<int>() >= 2 &&
                six.doc["aggregate"]["rc_max"].get<int>() <= 5,
            "order-6 band bounds");
}

// [6] canonical-coloring pruning changes nothing: rc_exact equals the
// exhaust-every-coloring oracle on all strong tournaments of orders 3, 4
void criterion_oracle_equivalence(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  for (int n : {3, 4}) {
    TournamentEnumerator en(n, /*strong_only=*/true);
    while (auto d = en.next()) {
      int fast = rc_exact(*d).value;
      int naive = oracles::naive_rc_all_colorings(*d, d->arc_count());
      if (fast != naive) {
        c.require(false, "mismatch at n=" + std::to_string(n) + " mask " +
                             std::to_string(en.current_mask()));
        return;
      }
    }
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  c.require_under(secs, 60.0, "oracle equivalence");
}

// [7] rc(directed triangle) = 3, independently brute-forced
void criterion_triangle(Check& c) {
  Digraph tri(3, {Arc{0, 1}, Arc{1, 2}, Arc{2, 0}});
  c.require(oracles::naive_rc_all_colorings(tri, 3) == 3,
            "brute-force oracle must give 3");
  c.require(rc_exact(tri).value == 3, "solver must give 3");
}

// [8] the four property suites
void criterion_properties(Check& c) {
  // color-permutation invariance, 500 random cases
  std::mt19937_64 rng(20250810);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    Digraph d = random_tournament(n, rng);
    int palette = 1 + static_cast<int>(rng() % 4);
    std::vector<int> colors;
    for (int i = 0; i < d.arc_count(); ++i)
      colors.push_back(static_cast<int>(rng() % static_cast<unsigned>(palette)));
    std::vector<int> perm(static_cast<size_t>(palette));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> renamed;
    for (int col : colors) renamed.push_back(perm[static_cast<size_t>(col)]);
    ColoredDigraph a(d, ArcColoring(d, colors, palette));
    ColoredDigraph b(d, ArcColoring(d, renamed, palette));
    if (is_rainbow_connected(a).connected !=
        is_rainbow_connected(b).connected) {
      c.require(false, "permutation invariance broken at trial " +
                           std::to_string(trial));
      return;
    }
  }

  // rotation automorphism of circulants up to order 15
  std::mt19937_64 rng2(99);
  for (int n = 2; n <= 15; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      std::set<int> diffs;
      int want = 1 + static_cast<int>(rng2() % static_cast<unsigned>(n - 1));
      while (static_cast<int>(diffs.size()) < want)
        diffs.insert(1 +
                     static_cast<int>(rng2() % static_cast<unsigned>(n - 1)));
      Digraph d = make_circulant(CirculantSpec{n, {diffs.begin(), diffs.end()}});
      for (const Arc& a : d.arcs())
        if (!d.has_arc((a.tail + 1) % n, (a.head + 1) % n)) {
          c.require(false, "rotation automorphism broken at n=" +
                               std::to_string(n));
          return;
        }
    }
  }

  // restricted-growth stream counts vs set-partition brute force, m <= 6
  for (int m = 1; m <= 6; ++m)
    for (int colors = 1; colors <= 4; ++colors) {
      CanonicalColoringEnumerator en(m, colors);
      std::uint64_t streamed = 0;
      while (en.next()) ++streamed;
      c.require(streamed == oracles::all_partitions(m, colors).size(),
                "canonical stream count at m=" + std::to_string(m) +
                    " c=" + std::to_string(colors));
    }

  // state-space search vs exhaustive path enumeration, orders <= 6
  std::mt19937_64 rng3(314159);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng3() % 4);
    Digraph d = random_tournament(n, rng3);
    int palette = 1 + static_cast<int>(rng3() % 4);
    std::vector<int> colors;
    for (int i = 0; i < d.arc_count(); ++i)
      colors.push_back(static_cast<int>(rng3() % static_cast<unsigned>(palette)));
    ColoredDigraph cd(d, ArcColoring(d, colors, palette));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        auto got = find_rainbow_path(cd, u, v);
        auto expect = oracles::naive_rainbow_path(cd, u, v);
        bool same = got.has_value() == expect.has_value() &&
                    (!got || got->vertices == *expect);
        if (!same) {
          c.require(false, "path search mismatch at trial " +
                               std::to_string(trial));
          return;
        }
      }
  }
}

// [9] spectrum: order 5 realizes k = 3 and 4 exhaustively; order 6 either
// exhibits witnesses or honestly reports the miss -- never a refutation
void criterion_spectrum(Check& c) {
  VerificationReport five = search_rc_spectrum(5, 0, 0, /*threads=*/0);
  c.require(five.ok, "order-5 spectrum not ok");
  std::set<int> found5;
  for (const Json& w : five.doc["witnesses"]) found5.insert(w["k"].get<int>());
  c.require(found5 == std::set<int>{3, 4}, "order-5 witnesses for k = 3, 4");

  VerificationReport six = search_rc_spectrum(6, 192, /*seed=*/7,
                                              /*threads=*/0);
  c.require(six.ok, "order-6 spectrum must stay inconclusive, not refuted");
  std::set<int> seen;
  for (const Json& w : six.doc["witnesses"]) {
    int k = w["k"].get<int>();
    seen.insert(k);
    ColoredDigraph witness = colored_from_json(w["witness"]);
    c.require(is_rainbow_connected(witness).connected &&
                  witness.coloring.colors_used() == k,
              "order-6 witness for k=" + std::to_string(k) + " broken");
  }
  for (const Json& m : six.doc["missing"]) {
    seen.insert(m["k"].get<int>());
    c.require(m["status"] == "not found within budget",
              "missing entries must be inconclusive");
  }
  c.require(seen == std::set<int>{3, 4, 5},
            "order-6 report must account for every k in 3..5");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Check&)> fn;
  };
  const std::vector<Criterion> criteria = {
      {"theorem3 reproduction, n = 6..40, rc = 2", criterion_theorem3},
      {"fixture constructions n = 6, 7, 8 exact", criterion_fixtures},
      {"proof certification, n = 7..41", criterion_proof_certification},
      {"small-case exhaustion, orders 4 and 5", criterion_small_cases},
      {"rc band: exhaustive order 5, sampled order 6", criterion_band},
      {"canonical solver == all-colorings oracle", criterion_oracle_equivalence},
      {"triangle ground truth rc = 3", criterion_triangle},
      {"property suites", criterion_properties},
      {"rc spectrum search (stretch)", criterion_spectrum},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].fn(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("[%zu] %-48s %s (%.2fs)\n", i + 1, criteria[i].name,
                check.failures.empty() ? "PASS" : "FAIL", secs);
    for (const std::string& f : check.failures)
      std::printf("      - %s\n", f.c_str());
    if (!check.failures.empty()) ++failed;
  }
  if (failed) std::printf("%d criterion(s) failed\n", failed);
  return failed ? 1 : 0;
}
