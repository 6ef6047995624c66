#pragma once

#include <string>

#include "rctour/coloring.hpp"

namespace rctour {

/// Graphviz rendering with vertex names v0..v{n-1}.
std::string to_dot(const Digraph& d);

/// Color 0 renders dashed, color 1 solid, higher colors as distinct pens.
std::string to_dot(const ColoredDigraph& cd);

}  // namespace rctour
