#include "rctour/constructions.hpp"

#include <algorithm>
#include <map>

namespace rctour {

namespace {

// Assemble a ColoredDigraph from explicit (arc -> color) assignments.
ColoredDigraph from_arc_colors(int order, const std::map<Arc, int>& by_arc,
                               int palette) {
  std::vector<Arc> arcs;
  arcs.reserve(by_arc.size());
  std::vector<int> colors;
  colors.reserve(by_arc.size());
  for (const auto& [arc, color] : by_arc) {  // std::map iterates sorted
    arcs.push_back(arc);
    colors.push_back(color);
  }
  Digraph d(order, arcs);
  ArcColoring coloring(d, std::move(colors), palette);
  return ColoredDigraph(std::move(d), std::move(coloring));
}

}  // namespace

ColoredDigraph construction_n6() {
  static const Arc kDashed[] = {{0, 1}, {0, 3}, {1, 4}, {2, 0},
                                {2, 3}, {4, 2}, {5, 0}};
  static const Arc kSolid[] = {{1, 2}, {3, 1}, {3, 4}, {3, 5},
                               {4, 5}, {4, 0}, {5, 1}, {5, 2}};
  std::map<Arc, int> by_arc;
  for (const Arc& a : kDashed) by_arc[a] = 0;
  for (const Arc& a : kSolid) by_arc[a] = 1;
  return from_arc_colors(6, by_arc, 2);
}

ColoredDigraph odd_construction(int k) {
  if (k < 3) throw_domain("odd construction needs k >= 3, got " +
                          std::to_string(k));
  const int n = 2 * k + 1;
  CirculantSpec spec{n, {1}};
  for (int i = 1; i < k; ++i) spec.differences.push_back(2 * i);
  Digraph d = make_circulant(spec);

  const Arc removed{2, 2 * k};
  const Arc special[] = {{0, 1}, {0, 2}, {1, 2 * k - 1}};
  std::vector<int> colors;
  colors.reserve(static_cast<size_t>(d.arc_count()));
  for (const Arc& a : d.arcs()) {
    bool dashed = (a.tail % 2 == 0 && a.tail >= 2 && a != removed) ||
                  std::find(std::begin(special), std::end(special), a) !=
                      std::end(special);
    colors.push_back(dashed ? 0 : 1);
  }
  ArcColoring coloring(d, std::move(colors), 2);
  return ColoredDigraph(std::move(d), std::move(coloring));
}

ColoredDigraph even_construction(int k) {
  if (k < 4) throw_domain("even construction needs k >= 4, got " +
                          std::to_string(k));
  ColoredDigraph base = odd_construction(k - 1);
  const int m = base.digraph.order();  // 2k - 1
  const int v = m;                     // new vertex gets the largest index
  const int n = 2 * k;

  std::map<Arc, int> by_arc;
  for (const Arc& a : base.digraph.arcs()) by_arc[a] = base.coloring.color_of(a);
  for (int i = 0; i < m; ++i)
    by_arc[i % 2 == 0 ? Arc{v, i} : Arc{i, v}] = 1;
  return from_arc_colors(n, by_arc, 2);
}

ColoredDigraph rc2_construction(int n) {
  if (n < 6)
    throw_domain("no 2-coloring construction exists below order 6 "
                 "(orders 4 and 5 force rc >= 3); got n = " +
                 std::to_string(n));
  if (n == 6) return construction_n6();
  if (n % 2 == 1) return odd_construction((n - 1) / 2);
  return even_construction(n / 2);
}

}  // namespace rctour
