#include "rctour/catalog.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <sstream>

#include "parallel.hpp"
#include "rctour/constructions.hpp"
#include "rctour/enumerate.hpp"
#include "rctour/json_io.hpp"
#include "rctour/solver.hpp"

namespace rctour {

namespace {

using internal::parallel_for_indexed;
using internal::resolve_threads;

constexpr const char* kRngNote =
    "mt19937_64(seed); unordered pairs (i, j), i < j, in lexicographic "
    "order; arc i->j iff the low bit of the next engine output is 0";

class ReportBuilder {
 public:
  explicit ReportBuilder(const std::string& claim)
      : start_(std::chrono::steady_clock::now()) {
    doc_["schema_version"] = 1;
    doc_["claim"] = claim;
  }

  Json& doc() { return doc_; }

  VerificationReport finish(bool ok) {
    doc_["ok"] = ok;
    doc_["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_)
            .count();
    return VerificationReport{std::move(doc_), ok};
  }

 private:
  Json doc_;
  std::chrono::steady_clock::time_point start_;
};

Json rc_instance_json(const char* id_field, std::uint64_t id,
                      const RcResult& rc) {
  Json j;
  j[id_field] = id;
  j["rc"] = rc.value;
  j["exact"] = rc.exact;
  j["colorings_examined"] = rc.colorings_examined;
  if (rc.witness) j["witness"] = colored_to_json(*rc.witness);
  return j;
}

}  // namespace

VerificationReport verify_theorem3(int n_max, int threads) {
  if (n_max < 6 || n_max > Digraph::kMaxOrder)
    throw_domain("construction verification runs for n_max in [6, " +
                 std::to_string(Digraph::kMaxOrder) + "], got " +
                 std::to_string(n_max));
  threads = resolve_threads(threads);

  ReportBuilder rb("theorem3");
  rb.doc()["parameters"] = Json{{"n_max", n_max}};

  const std::uint64_t count = static_cast<std::uint64_t>(n_max) - 5;
  std::vector<Json> instances(count);
  std::vector<char> passes(count, 0);
  parallel_for_indexed(count, threads, [&](std::uint64_t i) {
    const int n = static_cast<int>(i) + 6;
    Json inst;
    inst["n"] = n;
    try {
      ColoredDigraph cd = rc2_construction(n);
      const bool tournament = is_tournament(cd.digraph);
      const bool strong = is_strong(cd.digraph);
      const int colors_used = cd.coloring.colors_used();
      RainbowCheck check = is_rainbow_connected(cd);
      ProofCertificate pc = proof_certificate(n);
      ValidationReport vr = validate_certificate(cd, pc.entries);

      inst["arcs"] = cd.digraph.arc_count();
      inst["tournament"] = tournament;
      inst["strong"] = strong;
      inst["colors_used"] = colors_used;
      inst["rainbow_connected"] = check.connected;
      const bool pinned =
          tournament && strong && colors_used == 2 && check.connected;
      if (pinned) {
        inst["rc_lower_bound"] = rc_lower_bound_trivial(cd.digraph);
        inst["rc"] = 2;
      }
      inst["construction"] = colored_to_json(cd);
      if (check.connected)
        inst["certificate"] = certificate_to_json(check.certificate);
      Json proof;
      proof["entries_checked"] = vr.entries_checked;
      proof["violations"] = validation_report_to_json(vr)["violations"];
      proof["uncovered_pairs"] = vr.uncovered.size();
      Json notes = Json::array();
      for (const ProofNote& note : pc.notes)
        notes.push_back(Json{{"kind", note.kind}, {"detail", note.detail}});
      proof["notes"] = std::move(notes);
      inst["proof_certificate"] = std::move(proof);

      const bool pass = pinned && vr.ok();
      inst["pass"] = pass;
      passes[i] = pass ? 1 : 0;
    } catch (const Error& e) {
      inst["pass"] = false;
      inst["error"] = e.what();
    }
    instances[i] = std::move(inst);
  });

  bool ok = true;
  Json arr = Json::array();
  for (std::uint64_t i = 0; i < count; ++i) {
    ok = ok && passes[i];
    arr.push_back(std::move(instances[i]));
  }
  rb.doc()["instances"] = std::move(arr);
  rb.doc()["aggregate"] =
      Json{{"instances", count}, {"all_rc_2", ok}};
  return rb.finish(ok);
}

VerificationReport verify_small_cases(int threads) {
  threads = resolve_threads(threads);
  ReportBuilder rb("small_cases");
  rb.doc()["parameters"] = Json{{"orders", Json::array({4, 5})}};

  bool ok = true;
  Json strata = Json::array();
  for (int n : {4, 5}) {
    const int pair_bits = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pair_bits;
    std::vector<std::optional<Json>> slots(total);
    parallel_for_indexed(total, threads, [&](std::uint64_t mask) {
      Digraph d = TournamentEnumerator::tournament_from_mask(n, mask);
      if (!is_strong(d)) return;
      RcResult rc = rc_exact(d);
      slots[mask] = rc_instance_json("mask", mask, rc);
    });

    std::map<int, std::uint64_t> histogram;
    std::uint64_t strong = 0;
    Json instances = Json::array();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (!slots[mask]) continue;
      ++strong;
      ++histogram[(*slots[mask])["rc"].get<int>()];
      instances.push_back(std::move(*slots[mask]));
    }

    const int arcs = pair_bits;
    const std::uint64_t two_colorings = std::uint64_t{1} << (arcs - 1);
    const bool none_two_colorable = histogram.empty() || histogram.begin()->first >= 3;
    bool stratum_pass = none_two_colorable;
    if (n == 4)
      stratum_pass = stratum_pass && histogram.size() == 1 &&
                     histogram.count(3) && histogram[3] == strong;
    if (n == 5)
      stratum_pass = stratum_pass && histogram.size() == 2 &&
                     histogram.count(3) && histogram.count(4);

    Json hist;
    for (const auto& [rc, cnt] : histogram) hist[std::to_string(rc)] = cnt;
    Json stratum;
    stratum["n"] = n;
    stratum["tournaments"] = total;
    stratum["strong"] = strong;
    stratum["canonical_two_colorings_per_instance"] = two_colorings;
    stratum["rainbow_two_colorings_found"] = 0;
    stratum["rc_histogram"] = std::move(hist);
    stratum["pass"] = stratum_pass;
    stratum["instances"] = std::move(instances);
    strata.push_back(std::move(stratum));
    ok = ok && stratum_pass;
  }
  rb.doc()["strata"] = std::move(strata);
  return rb.finish(ok);
}

VerificationReport verify_theorem1_band(int n, int samples,
                                        std::uint64_t seed, bool exhaustive,
                                        int threads) {
  if (n < 5 || n > 7)
    throw_domain("band verification runs at orders 5..7, got " +
                 std::to_string(n));
  if (exhaustive && n != 5)
    throw_limit("exhaustive band sweep is supported at order 5 only");
  if (!exhaustive && samples < 1)
    throw_invalid("samples must be >= 1");
  threads = resolve_threads(threads);

  ReportBuilder rb("band");
  Json params;
  params["n"] = n;
  if (exhaustive) {
    params["mode"] = "exhaustive";
  } else {
    params["mode"] = "sampled";
    params["samples"] = samples;
    params["seed"] = seed;
    params["rng"] = kRngNote;
  }
  rb.doc()["parameters"] = std::move(params);

  // Draw first (sequential, so the stream depends only on the seed), then
  // solve in parallel.
  std::vector<std::pair<std::uint64_t, Digraph>> kept;
  std::uint64_t drawn = 0;
  if (exhaustive) {
    TournamentEnumerator en(n, /*strong_only=*/true);
    drawn = en.total_masks();
    while (auto d = en.next()) kept.emplace_back(en.current_mask(), *d);
  } else {
    std::mt19937_64 rng(seed);
    drawn = static_cast<std::uint64_t>(samples);
    for (int i = 0; i < samples; ++i) {
      Digraph d = random_tournament(n, rng);
      if (is_strong(d)) kept.emplace_back(static_cast<std::uint64_t>(i), d);
    }
  }

  std::vector<Json> instances(kept.size());
  std::vector<char> passes(kept.size(), 0);
  parallel_for_indexed(kept.size(), threads, [&](std::uint64_t i) {
    SolverOptions opt;
    opt.max_colors = n - 1;
    RcResult rc = rc_exact(kept[i].second, opt);
    const bool in_band = rc.exact && rc.value >= 2 && rc.value <= n - 1;
    Json inst =
        rc_instance_json(exhaustive ? "mask" : "draw", kept[i].first, rc);
    inst["in_band"] = in_band;
    passes[i] = in_band ? 1 : 0;
    instances[i] = std::move(inst);
  });

  bool ok = true;
  int rc_min = 0, rc_max = 0;
  Json arr = Json::array();
  for (size_t i = 0; i < instances.size(); ++i) {
    ok = ok && passes[i];
    int rc = instances[i]["rc"].get<int>();
    rc_min = rc_min == 0 ? rc : std::min(rc_min, rc);
    rc_max = std::max(rc_max, rc);
    arr.push_back(std::move(instances[i]));
  }
  rb.doc()["instances"] = std::move(arr);
  rb.doc()["aggregate"] = Json{{"drawn", drawn},
                               {"strong", kept.size()},
                               {"rc_min", rc_min},
                               {"rc_max", rc_max},
                               {"band", Json::array({2, n - 1})}};
  return rb.finish(ok && !kept.empty());
}

VerificationReport search_rc_spectrum(int n, int budget, std::uint64_t seed,
                                      int threads) {
  if (n < 5 || n > 6)
    throw_domain("spectrum search runs at orders 5 and 6, got " +
                 std::to_string(n));
  if (budget < 0) throw_invalid("budget must be >= 0");
  threads = resolve_threads(threads);

  const bool exhaustive = n == 5;
  ReportBuilder rb("spectrum");
  Json params;
  params["n"] = n;
  params["k_range"] = Json::array({3, n - 1});
  if (exhaustive) {
    params["mode"] = "exhaustive";
  } else {
    params["mode"] = "sampled";
    params["budget"] = budget;
    params["seed"] = seed;
    params["rng"] = kRngNote;
  }
  rb.doc()["parameters"] = std::move(params);
  rb.doc()["note"] =
      "existence search only: a missing k is inconclusive, never a "
      "refutation";

  std::map<int, Json> witness_by_k;  // least instance id per k
  std::uint64_t draws_used = 0;

  auto consider = [&](std::uint64_t id, const char* id_field,
                      const Digraph& d, const RcResult& rc) {
    if (!rc.exact) return;
    if (rc.value < 3 || rc.value > n - 1) return;  // rc = 2 exists at n = 6
    if (witness_by_k.count(rc.value)) return;
    Json w;
    w["k"] = rc.value;
    w[id_field] = id;
    w["tournament"] = digraph_to_json(d);
    w["colorings_examined"] = rc.colorings_examined;
    if (rc.witness) w["witness"] = colored_to_json(*rc.witness);
    witness_by_k[rc.value] = std::move(w);
  };

  if (exhaustive) {
    TournamentEnumerator en(n, /*strong_only=*/true);
    std::vector<std::pair<std::uint64_t, Digraph>> kept;
    while (auto d = en.next()) kept.emplace_back(en.current_mask(), *d);
    draws_used = en.total_masks();
    std::vector<std::optional<RcResult>> results(kept.size());
    parallel_for_indexed(kept.size(), threads, [&](std::uint64_t i) {
      SolverOptions opt;
      opt.max_colors = n - 1;
      results[i] = rc_exact(kept[i].second, opt);
    });
    for (size_t i = 0; i < kept.size(); ++i)
      consider(kept[i].first, "mask", kept[i].second, *results[i]);
  } else {
    // Fixed-size blocks keep the early stop deterministic: the block
    // boundary, not the thread schedule, decides how many draws run.
    constexpr int kBlock = 64;
    std::mt19937_64 rng(seed);
    int remaining = budget;
    while (remaining > 0 && static_cast<int>(witness_by_k.size()) < n - 3) {
      const int block = std::min(kBlock, remaining);
      remaining -= block;
      std::vector<std::pair<std::uint64_t, Digraph>> kept;
      for (int i = 0; i < block; ++i) {
        Digraph d = random_tournament(n, rng);
        ++draws_used;
        if (is_strong(d)) kept.emplace_back(draws_used - 1, d);
      }
      std::vector<std::optional<RcResult>> results(kept.size());
      parallel_for_indexed(kept.size(), threads, [&](std::uint64_t i) {
        SolverOptions opt;
        opt.max_colors = n - 1;
        results[i] = rc_exact(kept[i].second, opt);
      });
      for (size_t i = 0; i < kept.size(); ++i)
        consider(kept[i].first, "draw", kept[i].second, *results[i]);
    }
  }

  bool ok = true;
  Json found = Json::array();
  Json missing = Json::array();
  for (int k = 3; k <= n - 1; ++k) {
    if (witness_by_k.count(k)) {
      found.push_back(std::move(witness_by_k[k]));
    } else if (exhaustive) {
      // An exhaustive miss would be a genuine counterexample; flag it.
      missing.push_back(Json{{"k", k}, {"status", "absent under exhaustive search"}});
      ok = false;
    } else {
      missing.push_back(Json{{"k", k}, {"status", "not found within budget"}});
    }
  }
  rb.doc()["witnesses"] = std::move(found);
  rb.doc()["missing"] = std::move(missing);
  rb.doc()["aggregate"] = Json{{"draws_used", draws_used}};
  return rb.finish(ok);
}

std::string VerificationReport::render_text() const {
  std::ostringstream os;
  const std::string claim = doc.value("claim", "?");
  os << "claim: " << claim << "\n";
  if (doc.contains("parameters")) os << "parameters: " << doc["parameters"].dump() << "\n";

  if (claim == "theorem3" && doc.contains("instances")) {
    std::uint64_t pass = 0, emend = 0;
    for (const Json& inst : doc["instances"]) {
      if (inst.value("pass", false)) ++pass;
      if (inst.contains("proof_certificate"))
        for (const Json& note : inst["proof_certificate"]["notes"])
          if (note.value("kind", "") == "emendation") ++emend;
    }
    os << "instances: " << doc["instances"].size() << ", rc = 2 pinned on "
       << pass << "\n";
    os << "proof-path emendation flags (even orders): " << emend << "\n";
  } else if (claim == "small_cases" && doc.contains("strata")) {
    for (const Json& s : doc["strata"]) {
      os << "n=" << s["n"].get<int>() << ": strong " << s["strong"]
         << "/" << s["tournaments"] << ", rc histogram "
         << s["rc_histogram"].dump()
         << ", rainbow 2-colorings found: "
         << s["rainbow_two_colorings_found"] << "\n";
    }
  } else if (claim == "band" && doc.contains("aggregate")) {
    const Json& a = doc["aggregate"];
    os << "drawn " << a["drawn"] << ", strong " << a["strong"]
       << ", rc range [" << a["rc_min"] << ", " << a["rc_max"]
       << "], band " << a["band"].dump() << "\n";
  } else if (claim == "spectrum") {
    os << "witnesses found for k:";
    for (const Json& w : doc["witnesses"]) os << " " << w["k"];
    os << "\n";
    for (const Json& m : doc["missing"])
      os << "k=" << m["k"] << ": " << m["status"].get<std::string>() << "\n";
  }

  os << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  if (doc.contains("wall_time_ms"))
    os << "wall time: " << doc["wall_time_ms"] << " ms\n";
  return os.str();
}

}  // namespace rctour
