#pragma once

#include <cstdint>
#include <vector>

#include "rctour/digraph.hpp"

namespace rctour {

/// Total map from the arcs of a host digraph to color indices in
/// [0, palette_size). Colors are handed over aligned with the host's
/// lexicographically sorted arc list. The palette may contain unused
/// colors; colors_used() counts the distinct ones actually present.
class ArcColoring {
 public:
  ArcColoring(const Digraph& host, std::vector<int> colors_by_sorted_arc,
              int palette_size);

  int palette_size() const noexcept { return palette_size_; }
  int colors_used() const;

  /// Aligned with host.arcs() (lexicographic order).
  const std::vector<int>& colors() const noexcept { return colors_; }

  int color_of(int tail, int head) const;
  int color_of(const Arc& a) const { return color_of(a.tail, a.head); }

  /// True iff this coloring was built over a digraph equal to `d`:
  /// same order and exactly d's arcs colored.
  bool matches(const Digraph& d) const;

 private:
  int palette_size_ = 0;
  int order_ = 0;
  std::vector<int> colors_;  // by sorted arc index
  std::vector<int> table_;   // order*order, -1 for non-arcs
};

/// A digraph together with a coloring of exactly its arcs.
struct ColoredDigraph {
  Digraph digraph;
  ArcColoring coloring;

  ColoredDigraph(Digraph d, ArcColoring c);
};

/// Streams the colorings of `arc_count` arcs (in a fixed arc order) that use
/// at most `max_colors` colors and are canonical under color relabeling:
/// restricted-growth strings, i.e. the first arc has color 0 and every later
/// color is at most 1 + max of the earlier ones. Every coloring with at most
/// `max_colors` colors is a color permutation of exactly one streamed string.
///
/// Subtrees below a fixed prefix are independent, so consumers may split
/// work by prefix.
class CanonicalColoringEnumerator {
 public:
  CanonicalColoringEnumerator(int arc_count, int max_colors);

  /// Advances to the next string; the first call yields 00...0.
  bool next();

  const std::vector<std::uint8_t>& current() const noexcept { return string_; }

  /// 0-based rank of current() in the stream.
  std::uint64_t index() const noexcept { return index_; }

 private:
  int arc_count_;
  int max_colors_;
  bool started_ = false;
  std::uint64_t index_ = 0;
  std::vector<std::uint8_t> string_;
  std::vector<std::uint8_t> prefix_max_;  // max of string_[0..i-1]
};

/// Wraps a restricted-growth string as an ArcColoring over d's sorted arcs
/// (palette = highest color + 1, so no unused colors).
ArcColoring coloring_from_canonical(const Digraph& d,
                                    const std::vector<std::uint8_t>& rg);

}  // namespace rctour
