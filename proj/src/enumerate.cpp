#include "rctour/enumerate.hpp"

#include <string>

namespace rctour {

namespace {

int pair_count(int order) { return order * (order - 1) / 2; }

}  // namespace

TournamentEnumerator::TournamentEnumerator(int order, bool strong_only,
                                           int order_cap)
    : order_(order), strong_only_(strong_only) {
  if (order < 1) throw_invalid("order must be positive");
  if (order > order_cap) {
    int p = pair_count(order);
    std::string estimate = "2^" + std::to_string(p);
    if (p < 64)
      estimate += " = " + std::to_string(std::uint64_t{1} << p);
    throw_limit("enumerating order-" + std::to_string(order) +
                " tournaments means " + estimate +
                " orientations; cap is " + std::to_string(order_cap));
  }
  total_ = std::uint64_t{1} << pair_count(order);
}

std::optional<Digraph> TournamentEnumerator::next() {
  while (next_mask_ < total_) {
    Digraph d = tournament_from_mask(order_, next_mask_++);
    if (!strong_only_ || is_strong(d)) return d;
  }
  return std::nullopt;
}

Digraph TournamentEnumerator::tournament_from_mask(int order,
                                                   std::uint64_t mask) {
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(pair_count(order)));
  int bit = 0;
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j, ++bit)
      arcs.push_back((mask >> bit) & 1 ? Arc{j, i} : Arc{i, j});
  return Digraph(order, arcs);
}

Digraph random_tournament(int order, std::mt19937_64& rng) {
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(pair_count(order)));
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j)
      arcs.push_back((rng() & 1) == 0 ? Arc{i, j} : Arc{j, i});
  return Digraph(order, arcs);
}

}  // namespace rctour
