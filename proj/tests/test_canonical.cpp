#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rctour/coloring.hpp"
#include "support/oracles.hpp"

using namespace rctour;

namespace {

std::vector<std::vector<int>> collect(int arcs, int colors) {
  CanonicalColoringEnumerator en(arcs, colors);
  std::vector<std::vector<int>> out;
  while (en.next())
    out.emplace_back(en.current().begin(), en.current().end());
  return out;
}

}  // namespace

TEST_CASE("three arcs, three colors: the five restricted-growth strings") {
  auto strings = collect(3, 3);
  std::vector<std::vector<int>> expected{
      {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}};
  CHECK(strings == expected);
}

TEST_CASE("truncation at the palette") {
  CHECK(collect(3, 2).size() == 4);  // 012 excluded
  CHECK(collect(10, 2).size() == 512);
  CHECK(collect(4, 2).size() == 8);  // S(4,1) + S(4,2) = 1 + 7
  CHECK(collect(5, 1).size() == 1);
}

TEST_CASE("stream equals the brute-force set-partition census, m <= 6") {
  for (int m = 1; m <= 6; ++m)
    for (int c = 1; c <= 4; ++c) {
      auto strings = collect(m, c);
      auto expected = oracles::all_partitions(m, c);
      CAPTURE(m);
      CAPTURE(c);
      CHECK(strings.size() == expected.size());
      std::set<std::vector<int>> seen;
      for (const auto& s : strings) {
        CHECK(oracles::canonical_form(s) == s);  // already canonical
        CHECK(expected.count(s) == 1);
        CHECK(seen.insert(s).second);  // no repeats
      }
    }
}

TEST_CASE("every bounded coloring is a relabeling of exactly one string") {
  const int m = 5, c = 3;
  auto strings = collect(m, c);
  std::set<std::vector<int>> stream(strings.begin(), strings.end());
  // walk all c^m colorings, canonicalize, find it in the stream
  std::vector<int> colors(m, 0);
  for (;;) {
    CHECK(stream.count(oracles::canonical_form(colors)) == 1);
    int pos = m - 1;
    while (pos >= 0 && colors[pos] == c - 1) colors[pos--] = 0;
    if (pos < 0) break;
    ++colors[pos];
  }
}

TEST_CASE("index counts the stream position") {
  CanonicalColoringEnumerator en(4, 2);
  std::uint64_t expected = 0;
  while (en.next()) CHECK(en.index() == expected++);
  CHECK(expected == 8);
}

TEST_CASE("canonical string wraps into a gap-free coloring") {
  Digraph tri(3, {Arc{0, 1}, Arc{1, 2}, Arc{2, 0}});
  ArcColoring c = coloring_from_canonical(tri, {0, 1, 0});
  CHECK(c.palette_size() == 2);
  CHECK(c.colors_used() == 2);

  CHECK_THROWS_AS(CanonicalColoringEnumerator(0, 2), Error);
  CHECK_THROWS_AS(CanonicalColoringEnumerator(3, 0), Error);
}
