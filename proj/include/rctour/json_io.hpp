#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "rctour/rainbow.hpp"
#include "rctour/solver.hpp"

namespace rctour {

// Interchange formats. Writers emit arcs sorted lexicographically; readers
// accept any arc order but reject duplicates, self-loops and out-of-range
// endpoints. All emitters use nlohmann::ordered_json so field order is
// stable across runs.

using Json = nlohmann::ordered_json;

/// Parse with errors mapped to Status::parse.
Json parse_json(std::string_view text);

Json digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const Json& j);

/// Digraph fields plus "colors" (aligned with the sorted arc array) and
/// "palette_size".
Json colored_to_json(const ColoredDigraph& cd);
ColoredDigraph colored_from_json(const Json& j);

/// Array of {"from": u, "to": v, "path": [v0..vl]}.
Json certificate_to_json(const RainbowCertificate& cert);
/// Accepts either the bare entry array or an object with an "entries" field
/// (the shape proof_certificate_to_json emits).
RainbowCertificate certificate_from_json(const Json& j);

Json proof_certificate_to_json(const ProofCertificate& pc);

Json validation_report_to_json(const ValidationReport& report);

Json rc_result_to_json(const RcResult& result);

}  // namespace rctour
