#pragma once

#include <cstdint>
#include <optional>

#include "rctour/rainbow.hpp"

namespace rctour {

struct SolverOptions {
  /// Stop after sweeping this many colors (strict-lower-bound result if
  /// exhausted). Unset = up to the arc count.
  std::optional<int> max_colors;
  /// Canonical-coloring counts explode combinatorially; the caps make cost
  /// failures explicit instead of silent.
  int arc_cap = 64;
  int palette_cap = 8;
  /// Worker threads for the coloring sweep; 0 = hardware concurrency.
  /// Output is identical for every thread count.
  int threads = 1;
};

struct RcResult {
  /// Exact rainbow connection number when `exact`, otherwise the largest
  /// palette swept (rc is strictly greater).
  int value = 0;
  bool exact = false;
  std::optional<ColoredDigraph> witness;
  RainbowCertificate certificate;
  /// Canonical colorings enumerated up to and including the witness
  /// (full sweeps for exhausted palettes); independent of thread count.
  std::uint64_t colorings_examined = 0;
};

/// Exact rc by sweeping palettes c = 1, 2, ... over canonical colorings with
/// early exit on the first rainbow-connecting one. Canonicity loses no
/// generality: rainbow-connectedness is invariant under color renaming.
/// The witness is the lexicographically least canonical witness at the
/// least palette, regardless of thread count.
RcResult rc_exact(const Digraph& d, const SolverOptions& options = {});

/// Returns 2 for a strong tournament on n >= 3 vertices: the reverse of any
/// arc is a non-arc pair, so some witness path has >= 2 arcs and needs 2
/// distinct colors.
int rc_lower_bound_trivial(const Digraph& d);

}  // namespace rctour
