#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rctour/coloring.hpp"

namespace rctour {

struct VertexPair {
  int from = 0;
  int to = 0;

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// A directed path whose consecutive arcs carry pairwise distinct colors;
/// stored as its vertex sequence (a single vertex is the zero-arc path).
struct RainbowPath {
  std::vector<int> vertices;

  int length() const noexcept {
    return static_cast<int>(vertices.size()) - 1;
  }
};

struct CertificateEntry {
  int from = 0;
  int to = 0;
  std::vector<int> path;

  friend bool operator==(const CertificateEntry&,
                         const CertificateEntry&) = default;
};

/// Witness rainbow paths, one entry per covered ordered pair. Complete when
/// produced by is_rainbow_connected (all n(n-1) ordered pairs, row-major).
using RainbowCertificate = std::vector<CertificateEntry>;

// Rainbow path queries run a shortest-walk search over (vertex, used-color
// set) states. Deleting the cycle at a revisited vertex from a rainbow walk
// leaves a shorter rainbow walk, so minimum-length rainbow walks are
// vertex-simple and the state space decides the path predicate exactly.
// The color-set bitmask caps the usable palette.
inline constexpr int kMaxEnginePalette = 16;

/// Shortest rainbow path from `from` to `to`, lexicographically smallest
/// vertex sequence among the shortest; absent if no rainbow path exists.
/// from == to yields the zero-arc path.
std::optional<RainbowPath> find_rainbow_path(const ColoredDigraph& cd,
                                             int from, int to);

struct RainbowCheck {
  bool connected = false;
  /// Complete certificate iff connected.
  RainbowCertificate certificate;
  /// First pair (row-major) with no rainbow path, iff not connected.
  std::optional<VertexPair> failing_pair;
};

RainbowCheck is_rainbow_connected(const ColoredDigraph& cd);

struct ProofNote {
  std::string kind;  // "emendation" | "provenance"
  std::string detail;

  friend bool operator==(const ProofNote&, const ProofNote&) = default;
};

/// Explicit witness paths for rc2_construction(n): single arcs for pairs at
/// circulant differences, closed-form 2-arc families elsewhere. The even
/// family's final incoming-to-v path names tail index 2k, one past the base
/// cycle's last vertex; it is emitted with tail 2k-2 instead and the
/// substitution is flagged as an "emendation" note. Order-6 paths are
/// search-derived (flagged as "provenance").
struct ProofCertificate {
  int order = 0;
  RainbowCertificate entries;
  std::vector<ProofNote> notes;
};

ProofCertificate proof_certificate(int n);

struct CertificateViolation {
  int from = 0;
  int to = 0;
  std::vector<int> path;
  std::string reason;
};

struct ValidationReport {
  std::vector<CertificateViolation> violations;
  std::vector<VertexPair> uncovered;  // ordered pairs with no valid entry
  int entries_checked = 0;

  bool ok() const noexcept { return violations.empty() && uncovered.empty(); }
};

/// Checks every entry for arc existence, vertex distinctness and color
/// distinctness under cd's coloring, and reports coverage of all n(n-1)
/// ordered pairs. Violations are report content, not errors.
ValidationReport validate_certificate(const ColoredDigraph& cd,
                                      const RainbowCertificate& cert);

}  // namespace rctour
