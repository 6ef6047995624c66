#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rctour/constructions.hpp"
#include "rctour/dot.hpp"
#include "rctour/enumerate.hpp"
#include "rctour/json_io.hpp"

using namespace rctour;

TEST_CASE("digraph writes sorted arcs and reads back") {
  Digraph d(3, {Arc{2, 0}, Arc{0, 1}, Arc{1, 2}});
  Json j = digraph_to_json(d);
  CHECK(j["n"] == 3);
  CHECK(j["arcs"].dump() == "[[0,1],[1,2],[2,0]]");
  CHECK(digraph_from_json(j) == d);
}

TEST_CASE("reader accepts any arc order, rejects duplicates and junk") {
  CHECK(digraph_from_json(parse_json(R"({"n":3,"arcs":[[2,0],[1,2],[0,1]]})"))
            .arc_count() == 3);

  auto status_of = [](const char* text) {
    try {
      digraph_from_json(parse_json(text));
      return Status::ok;
    } catch (const Error& e) {
      return e.status();
    }
  };
  CHECK(status_of(R"({"n":3,"arcs":[[0,1],[0,1]]})") ==
        Status::invalid_argument);                                // duplicate
  CHECK(status_of(R"({"n":3,"arcs":[[0,0]]})") == Status::invalid_argument);
  CHECK(status_of(R"({"n":3,"arcs":[[0,5]]})") == Status::invalid_argument);
  CHECK(status_of(R"({"n":3})") == Status::parse);
  CHECK(status_of(R"({"arcs":[]})") == Status::parse);
  CHECK(status_of(R"({"n":3,"arcs":[[0]]})") == Status::parse);
  CHECK(status_of(R"({"n":3,"arcs":[["a","b"]]})") == Status::parse);
  CHECK(status_of(R"(not json)") == Status::parse);
  CHECK(status_of(R"([1,2,3])") == Status::parse);
}

TEST_CASE("colored digraph round trip is byte-stable") {
  ColoredDigraph cd = rc2_construction(7);
  Json j = colored_to_json(cd);
  CHECK(j["palette_size"] == 2);
  CHECK(j["colors"].size() == 21);
  ColoredDigraph back = colored_from_json(j);
  CHECK(colored_to_json(back).dump() == j.dump());
}

TEST_CASE("colored reader aligns colors with arcs positionally") {
  // same coloring, arcs listed in scrambled order
  Json j = parse_json(
      R"({"n":3,"arcs":[[2,0],[0,1],[1,2]],"colors":[2,0,1],"palette_size":3})");
  ColoredDigraph cd = colored_from_json(j);
  CHECK(cd.coloring.color_of(2, 0) == 2);
  CHECK(cd.coloring.color_of(0, 1) == 0);
  CHECK(cd.coloring.color_of(1, 2) == 1);

  CHECK_THROWS_AS(colored_from_json(parse_json(
                      R"({"n":3,"arcs":[[0,1]],"colors":[0,1],"palette_size":2})")),
                  Error);
  CHECK_THROWS_AS(colored_from_json(parse_json(
                      R"({"n":3,"arcs":[[0,1]],"colors":[5],"palette_size":2})")),
                  Error);
}

TEST_CASE("certificates round trip, object form included") {
  ProofCertificate pc = proof_certificate(8);
  Json array_form = certificate_to_json(pc.entries);
  Json object_form = proof_certificate_to_json(pc);
  CHECK(certificate_from_json(array_form) == pc.entries);
  CHECK(certificate_from_json(object_form) == pc.entries);
  CHECK(object_form["n"] == 8);
  REQUIRE(object_form["notes"].size() == 1);
  CHECK(object_form["notes"][0]["kind"] == "emendation");

  CHECK_THROWS_AS(certificate_from_json(parse_json(R"({"n":3})")), Error);
  CHECK_THROWS_AS(certificate_from_json(parse_json(R"([{"from":0}])")), Error);
}

TEST_CASE("validation report serialization") {
  ColoredDigraph cd = rc2_construction(7);
  ValidationReport ok_report =
      validate_certificate(cd, proof_certificate(7).entries);
  Json j = validation_report_to_json(ok_report);
  CHECK(j["ok"] == true);
  CHECK(j["violations"].empty());
  CHECK(j["uncovered"].empty());

  ValidationReport bad = validate_certificate(cd, {{0, 3, {0, 3}}});
  Json jb = validation_report_to_json(bad);
  CHECK(jb["ok"] == false);
  CHECK(jb["violations"].size() == 1);
  CHECK(jb["uncovered"].size() == 42);
}

TEST_CASE("rc result serialization") {
  RcResult rc;
  rc.value = 2;
  rc.exact = true;
  rc.colorings_examined = 17;
  Json j = rc_result_to_json(rc);
  CHECK(j["value"] == 2);
  CHECK(j["exact"] == true);
  CHECK(j["colorings_examined"] == 17);
  CHECK(j.contains("certificate"));

  RcResult bounded;
  bounded.value = 3;
  bounded.exact = false;
  Json jb = rc_result_to_json(bounded);
  CHECK_FALSE(jb.contains("witness"));
  CHECK_FALSE(jb.contains("certificate"));
}

TEST_CASE("random digraphs survive the round trip") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    std::vector<Arc> arcs;
    for (int t = 0; t < n; ++t)
      for (int h = 0; h < n; ++h)
        if (t != h && (rng() & 3) == 0) arcs.push_back({t, h});
    Digraph d(n, arcs);
    CHECK(digraph_from_json(digraph_to_json(d)) == d);
  }
}

TEST_CASE("DOT export") {
  ColoredDigraph cd = construction_n6();
  std::string dot = to_dot(cd);
  CHECK(dot.find("digraph T {") == 0);
  CHECK(dot.find("  v0;") != std::string::npos);
  CHECK(dot.find("v0 -> v1 [style=dashed];") != std::string::npos);
  CHECK(dot.find("v1 -> v2 [style=solid];") != std::string::npos);

  Digraph tri(3, {Arc{0, 1}, Arc{1, 2}, Arc{2, 0}});
  std::string plain = to_dot(tri);
  CHECK(plain.find("v0 -> v1;") != std::string::npos);
  CHECK(plain.find("style") == std::string::npos);

  // colors beyond the two line styles pick distinct pens
  ArcColoring c3(tri, {0, 1, 2}, 3);
  std::string penned = to_dot(ColoredDigraph(tri, c3));
  CHECK(penned.find("v2 -> v0 [style=solid, color=red];") !=
        std::string::npos);
}
