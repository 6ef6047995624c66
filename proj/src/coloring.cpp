#include "rctour/coloring.hpp"

#include <algorithm>

namespace rctour {

ArcColoring::ArcColoring(const Digraph& host,
                         std::vector<int> colors_by_sorted_arc,
                         int palette_size)
    : palette_size_(palette_size),
      order_(host.order()),
      colors_(std::move(colors_by_sorted_arc)) {
  if (palette_size < 1)
    throw_invalid("palette size must be >= 1, got " +
                  std::to_string(palette_size));
  const std::vector<Arc> arcs = host.arcs();
  if (colors_.size() != arcs.size())
    throw_invalid("coloring has " + std::to_string(colors_.size()) +
                  " entries for " + std::to_string(arcs.size()) + " arcs");
  table_.assign(static_cast<size_t>(order_) * order_, -1);
  for (size_t i = 0; i < arcs.size(); ++i) {
    int c = colors_[i];
    if (c < 0 || c >= palette_size_)
      throw_invalid("color " + std::to_string(c) + " on arc (" +
                    std::to_string(arcs[i].tail) + ", " +
                    std::to_string(arcs[i].head) + ") outside palette [0, " +
                    std::to_string(palette_size_) + ")");
    table_[static_cast<size_t>(arcs[i].tail) * order_ + arcs[i].head] = c;
  }
}

int ArcColoring::colors_used() const {
  std::vector<bool> used(static_cast<size_t>(palette_size_), false);
  int count = 0;
  for (int c : colors_)
    if (!used[static_cast<size_t>(c)]) {
      used[static_cast<size_t>(c)] = true;
      ++count;
    }
  return count;
}

int ArcColoring::color_of(int tail, int head) const {
  if (tail < 0 || tail >= order_ || head < 0 || head >= order_)
    throw_invalid("vertex pair (" + std::to_string(tail) + ", " +
                  std::to_string(head) + ") out of range");
  int c = table_[static_cast<size_t>(tail) * order_ + head];
  if (c < 0)
    throw_invalid("no arc (" + std::to_string(tail) + ", " +
                  std::to_string(head) + ") to look up");
  return c;
}

bool ArcColoring::matches(const Digraph& d) const {
  if (d.order() != order_) return false;
  if (d.arc_count() != static_cast<int>(colors_.size())) return false;
  for (int t = 0; t < order_; ++t)
    for (int h = 0; h < order_; ++h) {
      bool colored = table_[static_cast<size_t>(t) * order_ + h] >= 0;
      if (colored != (t != h && d.has_arc(t, h))) return false;
    }
  return true;
}

ColoredDigraph::ColoredDigraph(Digraph d, ArcColoring c)
    : digraph(std::move(d)), coloring(std::move(c)) {
  if (!coloring.matches(digraph))
    throw_invalid("coloring does not match the digraph it is paired with");
}

CanonicalColoringEnumerator::CanonicalColoringEnumerator(int arc_count,
                                                         int max_colors)
    : arc_count_(arc_count), max_colors_(max_colors) {
  if (arc_count < 1) throw_invalid("need at least one arc to color");
  if (max_colors < 1) throw_invalid("need at least one color");
  string_.assign(static_cast<size_t>(arc_count), 0);
  prefix_max_.assign(static_cast<size_t>(arc_count), 0);
}

bool CanonicalColoringEnumerator::next() {
  if (!started_) {
    started_ = true;
    return true;  // the all-zero string
  }
  for (int t = arc_count_ - 1; t >= 1; --t) {
    int limit = std::min(max_colors_ - 1, prefix_max_[static_cast<size_t>(t)] + 1);
    if (string_[static_cast<size_t>(t)] < limit) {
      ++string_[static_cast<size_t>(t)];
      for (int s = t + 1; s < arc_count_; ++s) {
        prefix_max_[static_cast<size_t>(s)] =
            std::max(prefix_max_[static_cast<size_t>(s - 1)],
                     string_[static_cast<size_t>(s - 1)]);
        string_[static_cast<size_t>(s)] = 0;
      }
      ++index_;
      return true;
    }
  }
  return false;
}

ArcColoring coloring_from_canonical(const Digraph& d,
                                    const std::vector<std::uint8_t>& rg) {
  std::vector<int> colors(rg.begin(), rg.end());
  int palette = colors.empty() ? 1 : *std::max_element(colors.begin(), colors.end()) + 1;
  return ArcColoring(d, std::move(colors), palette);
}

}  // namespace rctour
