#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace rctour {

/// Reproduction report for one catalog claim. The JSON document has a
/// stable field order and is byte-identical across runs with the same
/// parameters and seed, except for the trailing "wall_time_ms" field.
/// Every rc value in a report is backed by a stored witness or certificate.
struct VerificationReport {
  nlohmann::ordered_json doc;
  bool ok = false;

  std::string render_text() const;
};

/// For every n in 6..n_max: builds rc2_construction(n), asserts it is a
/// strong tournament, rainbow-connected on 2 colors, and combines with the
/// trivial lower bound to pin rc = 2; also validates the closed-form proof
/// certificate and records its notes. 6 <= n_max <= 64.
VerificationReport verify_theorem3(int n_max, int threads = 1);

/// Exhausts all labeled strong tournaments on 4 and 5 vertices: no
/// rainbow-connecting 2-coloring exists at either order, every order-4
/// instance has rc exactly 3, and order-5 rc values are exactly {3, 4}.
VerificationReport verify_small_cases(int threads = 1);

/// Checks 2 <= rc <= n-1 on strong tournaments of order n (5 <= n <= 7):
/// exhaustive enumeration when `exhaustive` (n = 5 only), otherwise
/// `samples` seeded uniform random tournaments, keeping the strong ones.
VerificationReport verify_theorem1_band(int n, int samples,
                                        std::uint64_t seed,
                                        bool exhaustive = false,
                                        int threads = 1);

/// Searches for strong tournaments of order n realizing each rc value
/// k in 3..n-1: exhaustively at n = 5, by seeded sampling with `budget`
/// draws at n = 6. Missing values are reported as "not found within
/// budget" -- absence of a witness is never treated as a refutation.
VerificationReport search_rc_spectrum(int n, int budget, std::uint64_t seed,
                                      int threads = 1);

}  // namespace rctour
