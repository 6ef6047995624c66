#include "rctour/solver.hpp"

#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "parallel.hpp"

namespace rctour {

namespace {

using internal::resolve_threads;

// Boolean rainbow-connectedness for one candidate restricted-growth string.
// Reuses scratch buffers across candidates and tries the most recent failing
// pair first; most non-solutions die on that single pair.
class SweepChecker {
 public:
  SweepChecker(const Digraph& d, int palette)
      : n_(d.order()),
        palette_(palette),
        arcs_(d.arcs()),
        out_by_color_(static_cast<size_t>(palette) * n_, 0),
        reach_(std::uint32_t{1} << palette, 0) {
    out_full_.reserve(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) out_full_.push_back(d.out_row(v));
  }

  bool connected(const std::vector<std::uint8_t>& rg) {
    std::fill(out_by_color_.begin(), out_by_color_.end(), 0);
    for (size_t i = 0; i < arcs_.size(); ++i)
      out_by_color_[static_cast<size_t>(rg[i]) * n_ + arcs_[i].tail] |=
          std::uint64_t{1} << arcs_[i].head;

    if (!pair_reachable(hint_.from, hint_.to)) return false;
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        if (u == v) continue;
        if (!pair_reachable(u, v)) {
          hint_ = {u, v};
          return false;
        }
      }
    return true;
  }

 private:
  bool pair_reachable(int u, int v) {
    if (u == v) return true;
    if ((out_full_[static_cast<size_t>(u)] >> v) & 1u) return true;
    const std::uint32_t width = std::uint32_t{1} << palette_;
    std::fill(reach_.begin(), reach_.end(), 0);
    reach_[0] = std::uint64_t{1} << u;
    const std::uint64_t vbit = std::uint64_t{1} << v;
    for (std::uint32_t used = 0; used < width; ++used) {
      std::uint64_t frontier = reach_[used];
      if (!frontier) continue;
      if (frontier & vbit) return true;
      for (int c = 0; c < palette_; ++c) {
        if ((used >> c) & 1u) continue;
        std::uint64_t image = 0;
        std::uint64_t t = frontier;
        while (t) {
          int x = std::countr_zero(t);
          t &= t - 1;
          image |= out_by_color_[static_cast<size_t>(c) * n_ + x];
        }
        reach_[used | (std::uint32_t{1} << c)] |= image;
      }
    }
    return false;
  }

  int n_;
  int palette_;
  std::vector<Arc> arcs_;
  std::vector<std::uint64_t> out_full_;
  std::vector<std::uint64_t> out_by_color_;
  std::vector<std::uint64_t> reach_;
  VertexPair hint_{0, 1};
};

struct SweepOutcome {
  std::optional<std::uint64_t> witness_index;
  std::vector<std::uint8_t> witness;
  std::uint64_t enumerated = 0;  // strings handed out during the sweep
};

SweepOutcome sweep_sequential(const Digraph& d, int palette) {
  SweepOutcome out;
  CanonicalColoringEnumerator en(d.arc_count(), palette);
  SweepChecker checker(d, palette);
  while (en.next()) {
    ++out.enumerated;
    if (checker.connected(en.current())) {
      out.witness_index = en.index();
      out.witness = en.current();
      break;
    }
  }
  return out;
}

// Workers pull fixed-size blocks off the shared enumerator (stepping is
// cheap next to checking) and keep the least-index witness; indices at or
// beyond the current best are skippable, so the reduction is exactly the
// sequential early-exit result for every thread count.
SweepOutcome sweep_parallel(const Digraph& d, int palette, int threads) {
  constexpr int kBlock = 256;
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

  CanonicalColoringEnumerator en(d.arc_count(), palette);
  std::mutex enum_mutex;
  bool exhausted = false;
  std::uint64_t enumerated = 0;

  std::atomic<std::uint64_t> best{kNone};
  std::mutex best_mutex;
  std::vector<std::uint8_t> best_string;

  auto worker = [&]() {
    SweepChecker checker(d, palette);
    std::vector<std::pair<std::uint64_t, std::vector<std::uint8_t>>> block;
    block.reserve(kBlock);
    for (;;) {
      block.clear();
      {
        std::lock_guard<std::mutex> lock(enum_mutex);
        while (!exhausted && static_cast<int>(block.size()) < kBlock) {
          if (!en.next()) {
            exhausted = true;
            break;
          }
          ++enumerated;
          if (en.index() >= best.load(std::memory_order_relaxed)) {
            exhausted = true;  // nothing past the best witness matters
            break;
          }
          block.emplace_back(en.index(), en.current());
        }
      }
      if (block.empty()) return;
      for (auto& [idx, rg] : block) {
        if (idx >= best.load(std::memory_order_relaxed)) continue;
        if (checker.connected(rg)) {
          std::lock_guard<std::mutex> lock(best_mutex);
          if (idx < best.load()) {
            best.store(idx);
            best_string = std::move(rg);
          }
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  SweepOutcome out;
  out.enumerated = enumerated;
  if (best.load() != kNone) {
    out.witness_index = best.load();
    out.witness = std::move(best_string);
  }
  return out;
}

}  // namespace

RcResult rc_exact(const Digraph& d, const SolverOptions& options) {
  if (d.order() < 2)
    throw_domain("rc needs at least 2 vertices, got order " +
                 std::to_string(d.order()));
  if (!is_strong(d)) throw_domain("rc undefined for non-strong digraph");
  const int m = d.arc_count();
  if (m > options.arc_cap)
    throw_limit("arc count " + std::to_string(m) + " exceeds the solver cap " +
                std::to_string(options.arc_cap));
  if (options.palette_cap < 1 || options.palette_cap > kMaxEnginePalette)
    throw_limit("palette cap must be in [1, " +
                std::to_string(kMaxEnginePalette) + "], got " +
                std::to_string(options.palette_cap));
  if (options.max_colors && *options.max_colors < 1)
    throw_invalid("max_colors must be >= 1");
  const int threads = resolve_threads(options.threads);
  const int c_max =
      std::min({options.max_colors.value_or(m), options.palette_cap, m});

  RcResult result;
  for (int c = 1; c <= c_max; ++c) {
    SweepOutcome sweep = threads > 1 ? sweep_parallel(d, c, threads)
                                     : sweep_sequential(d, c);
    if (sweep.witness_index) {
      result.colorings_examined += *sweep.witness_index + 1;
      result.value = c;
      result.exact = true;
      ArcColoring coloring = coloring_from_canonical(d, sweep.witness);
      // a witness using fewer colors would have ended an earlier sweep
      if (coloring.palette_size() != c)
        throw_invalid("internal: witness palette disagrees with the sweep");
      result.witness.emplace(d, std::move(coloring));
      RainbowCheck check = is_rainbow_connected(*result.witness);
      if (!check.connected)
        throw_invalid("internal: sweep witness failed re-validation");
      result.certificate = std::move(check.certificate);
      return result;
    }
    result.colorings_examined += sweep.enumerated;
  }
  result.value = c_max;
  result.exact = false;
  return result;
}

int rc_lower_bound_trivial(const Digraph& d) {
  if (d.order() < 3)
    throw_domain("trivial lower bound needs order >= 3, got " +
                 std::to_string(d.order()));
  if (!is_tournament(d)) throw_domain("trivial lower bound needs a tournament");
  if (!is_strong(d))
    throw_domain("trivial lower bound needs a strong tournament");
  return 2;
}

}  // namespace rctour
