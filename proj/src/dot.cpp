#include "rctour/dot.hpp"

#include <sstream>

namespace rctour {

namespace {

// Pens for color indices >= 2; 14 names cover the engine palette cap.
const char* kPens[] = {"red",      "blue",    "forestgreen", "orange",
                       "purple",   "brown",   "deeppink",    "cadetblue",
                       "goldenrod", "navy",   "darkcyan",    "firebrick",
                       "olive",    "indigo"};

void emit_header(std::ostringstream& os, int order) {
  os << "digraph T {\n";
  for (int v = 0; v < order; ++v) os << "  v" << v << ";\n";
}

}  // namespace

std::string to_dot(const Digraph& d) {
  std::ostringstream os;
  emit_header(os, d.order());
  for (const Arc& a : d.arcs())
    os << "  v" << a.tail << " -> v" << a.head << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const ColoredDigraph& cd) {
  std::ostringstream os;
  emit_header(os, cd.digraph.order());
  for (const Arc& a : cd.digraph.arcs()) {
    int c = cd.coloring.color_of(a);
    os << "  v" << a.tail << " -> v" << a.head;
    if (c == 0) {
      os << " [style=dashed]";
    } else if (c == 1) {
      os << " [style=solid]";
    } else {
      os << " [style=solid, color="
         << kPens[static_cast<size_t>(c - 2) % std::size(kPens)] << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace rctour
