#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "rctour/error.hpp"

namespace rctour {

/// Ordered pair of distinct vertex indices; the key type for arc colorings.
struct Arc {
  int tail = 0;
  int head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Finite simple digraph on vertices 0..n-1, immutable after construction.
///
/// Adjacency is stored as one 64-bit out-neighborhood row per vertex (plus
/// the transposed rows), which caps the order at 64 and makes arc tests,
/// closure sweeps and the solver inner loops branch-light.
class Digraph {
 public:
  static constexpr int kMaxOrder = 64;

  Digraph(int order, std::span<const Arc> arcs);
  Digraph(int order, std::initializer_list<Arc> arcs)
      : Digraph(order, std::span<const Arc>(arcs.begin(), arcs.size())) {}

  int order() const noexcept { return order_; }
  int arc_count() const noexcept { return arc_count_; }

  bool has_arc(int tail, int head) const {
    check_vertex(tail);
    check_vertex(head);
    return (out_[static_cast<size_t>(tail)] >> head) & 1u;
  }

  std::uint64_t out_row(int v) const {
    check_vertex(v);
    return out_[static_cast<size_t>(v)];
  }
  std::uint64_t in_row(int v) const {
    check_vertex(v);
    return in_[static_cast<size_t>(v)];
  }

  /// All arcs in lexicographic (tail, head) order.
  std::vector<Arc> arcs() const;

  /// Bitmask with one bit per vertex.
  std::uint64_t full_vertex_mask() const noexcept {
    return order_ == 64 ? ~std::uint64_t{0}
                        : (std::uint64_t{1} << order_) - 1;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= order_)
      throw_invalid("vertex " + std::to_string(v) + " out of range [0, " +
                    std::to_string(order_) + ")");
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int order_ = 0;
  int arc_count_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

/// Order n plus difference set S; defines the circulant digraph C_n(S).
struct CirculantSpec {
  int order = 0;
  std::vector<int> differences;

  /// Throws unless order >= 2 and S is a nonempty set of distinct values
  /// in [1, order-1]. The error names the offending element.
  void validate() const;
};

/// C_n(S): arc (i, j) present iff (j - i) mod n is in S. Arc count is n*|S|.
Digraph make_circulant(const CirculantSpec& spec);

/// True iff every unordered vertex pair is joined by exactly one arc.
bool is_tournament(const Digraph& d);

/// Number-theoretic shortcut: C_n(S) is a tournament iff for every
/// s in 1..n-1 exactly one of s, n-s lies in S.
bool circulant_is_tournament(const CirculantSpec& spec);

/// True iff every ordered vertex pair is joined by a directed path.
bool is_strong(const Digraph& d);

}  // namespace rctour
