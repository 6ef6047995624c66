#include "rctour/digraph.hpp"

#include <algorithm>
#include <bit>

namespace rctour {

Digraph::Digraph(int order, std::span<const Arc> arcs) : order_(order) {
  if (order < 1) throw_invalid("digraph order must be positive, got " +
                               std::to_string(order));
  if (order > kMaxOrder)
    throw_limit("order " + std::to_string(order) + " exceeds the " +
                std::to_string(kMaxOrder) + "-vertex adjacency-row limit");
  out_.assign(static_cast<size_t>(order), 0);
  in_.assign(static_cast<size_t>(order), 0);
  for (const Arc& a : arcs) {
    check_vertex(a.tail);
    check_vertex(a.head);
    if (a.tail == a.head)
      throw_invalid("self-loop (" + std::to_string(a.tail) + ", " +
                    std::to_string(a.head) + ") not allowed");
    std::uint64_t bit = std::uint64_t{1} << a.head;
    if (out_[static_cast<size_t>(a.tail)] & bit)
      throw_invalid("duplicate arc (" + std::to_string(a.tail) + ", " +
                    std::to_string(a.head) + ")");
    out_[static_cast<size_t>(a.tail)] |= bit;
    in_[static_cast<size_t>(a.head)] |= std::uint64_t{1} << a.tail;
    ++arc_count_;
  }
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(static_cast<size_t>(arc_count_));
  for (int t = 0; t < order_; ++t) {
    std::uint64_t row = out_[static_cast<size_t>(t)];
    while (row) {
      int h = std::countr_zero(row);
      row &= row - 1;
      result.push_back({t, h});
    }
  }
  return result;
}

void CirculantSpec::validate() const {
  if (order < 2)
    throw_invalid("circulant order must be >= 2, got " +
                  std::to_string(order));
  if (differences.empty())
    throw_invalid("circulant difference set must be nonempty");
  std::vector<bool> seen(static_cast<size_t>(order), false);
  for (int s : differences) {
    if (s < 1 || s >= order)
      throw_invalid("difference " + std::to_string(s) +
                    " out of range [1, " + std::to_string(order) + ")");
    if (seen[static_cast<size_t>(s)])
      throw_invalid("difference " + std::to_string(s) + " listed twice");
    seen[static_cast<size_t>(s)] = true;
  }
}

Digraph make_circulant(const CirculantSpec& spec) {
  spec.validate();
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(spec.order) * spec.differences.size());
  for (int i = 0; i < spec.order; ++i)
    for (int s : spec.differences) arcs.push_back({i, (i + s) % spec.order});
  return Digraph(spec.order, arcs);
}

bool is_tournament(const Digraph& d) {
  for (int i = 0; i < d.order(); ++i)
    for (int j = i + 1; j < d.order(); ++j)
      if (d.has_arc(i, j) == d.has_arc(j, i)) return false;
  return true;
}

bool circulant_is_tournament(const CirculantSpec& spec) {
  spec.validate();
  std::vector<bool> in_s(static_cast<size_t>(spec.order), false);
  for (int s : spec.differences) in_s[static_cast<size_t>(s)] = true;
  for (int s = 1; s < spec.order; ++s)
    if (in_s[static_cast<size_t>(s)] ==
        in_s[static_cast<size_t>(spec.order - s)])
      return false;
  return true;
}

namespace {

std::uint64_t closure_from(const Digraph& d, int start, bool forward) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= forward ? d.out_row(v) : d.in_row(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

bool is_strong(const Digraph& d) {
  // Strong iff vertex 0 reaches everything and everything reaches vertex 0.
  std::uint64_t full = d.full_vertex_mask();
  return closure_from(d, 0, true) == full && closure_from(d, 0, false) == full;
}

}  // namespace rctour
