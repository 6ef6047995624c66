#pragma once

#include "rctour/coloring.hpp"

namespace rctour {

// Explicit 2-colored tournaments whose every ordered vertex pair is joined
// by a rainbow path, one family per order n >= 6. Color 0 is the "dashed"
// class, color 1 the "solid" class of the DOT rendering.

/// The fixed 6-vertex tournament with its 2-coloring (7 dashed, 8 solid arcs).
ColoredDigraph construction_n6();

/// Odd orders n = 2k+1, k >= 3: the circulant C_n(1,2,4,...,2(k-1)) with
/// color 0 on {(0,1), (0,2), (1,2k-1)} plus every arc whose tail is even and
/// >= 2 except (2,2k), and color 1 elsewhere. The color-0 class has k^2+2 arcs.
ColoredDigraph odd_construction(int k);

/// Even orders n = 2k, k >= 4: the odd construction of parameter k-1 on
/// vertices 0..2k-2, plus a new vertex v = 2k-1 with arc (v, u_i) iff i is
/// even and (u_i, v) iff i is odd, all 2k-1 new arcs colored 1.
ColoredDigraph even_construction(int k);

/// Dispatch over the three families; requires n >= 6 (orders 4 and 5 admit
/// no rainbow-connecting 2-coloring at all).
ColoredDigraph rc2_construction(int n);

}  // namespace rctour
