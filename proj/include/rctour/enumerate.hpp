#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "rctour/digraph.hpp"

namespace rctour {

inline constexpr int kDefaultEnumerationCap = 6;

/// Streams every labeled tournament on `order` vertices exactly once by
/// running a binary counter over the orientations of the n(n-1)/2 unordered
/// pairs in lexicographic pair order. No isomorphism rejection.
///
/// Single consumer. Parallel consumers should split the mask range and use
/// tournament_from_mask directly.
class TournamentEnumerator {
 public:
  TournamentEnumerator(int order, bool strong_only,
                       int order_cap = kDefaultEnumerationCap);

  std::optional<Digraph> next();

  /// 2^(n(n-1)/2), the length of the unfiltered stream.
  std::uint64_t total_masks() const noexcept { return total_; }

  /// Mask of the tournament most recently returned by next().
  std::uint64_t current_mask() const noexcept { return next_mask_ - 1; }

  /// Unranking: bit b of `mask` orients pair b (lex order over i<j);
  /// bit 0 gives arc (i, j), bit 1 gives arc (j, i).
  static Digraph tournament_from_mask(int order, std::uint64_t mask);

 private:
  int order_;
  bool strong_only_;
  std::uint64_t next_mask_ = 0;
  std::uint64_t total_;
};

/// Uniform random labeled tournament: each unordered pair (i, j), i < j, in
/// lexicographic order is oriented i->j iff the low bit of the next engine
/// output is 0. mt19937_64 is fully specified by the standard, so draws
/// reproduce across platforms.
Digraph random_tournament(int order, std::mt19937_64& rng);

}  // namespace rctour
