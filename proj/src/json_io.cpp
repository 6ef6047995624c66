#include "rctour/json_io.hpp"

#include <algorithm>

namespace rctour {

namespace {

int require_int(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw_parse(std::string("missing or non-integer field \"") + field + "\"");
  return j[field].get<int>();
}

const Json& require_array(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw_parse(std::string("missing or non-array field \"") + field + "\"");
  return j[field];
}

Arc arc_from_json(const Json& entry) {
  if (!entry.is_array() || entry.size() != 2 ||
      !entry[0].is_number_integer() || !entry[1].is_number_integer())
    throw_parse("arc entries must be [tail, head] integer pairs");
  return {entry[0].get<int>(), entry[1].get<int>()};
}

}  // namespace

Json parse_json(std::string_view text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw_parse("malformed JSON input");
  return j;
}

Json digraph_to_json(const Digraph& d) {
  Json j;
  j["n"] = d.order();
  Json arcs = Json::array();
  for (const Arc& a : d.arcs()) arcs.push_back(Json::array({a.tail, a.head}));
  j["arcs"] = std::move(arcs);
  return j;
}

Digraph digraph_from_json(const Json& j) {
  if (!j.is_object()) throw_parse("digraph JSON must be an object");
  int n = require_int(j, "n");
  std::vector<Arc> arcs;
  for (const Json& entry : require_array(j, "arcs"))
    arcs.push_back(arc_from_json(entry));
  return Digraph(n, arcs);  // rejects duplicates, loops, range errors
}

Json colored_to_json(const ColoredDigraph& cd) {
  Json j = digraph_to_json(cd.digraph);
  j["colors"] = cd.coloring.colors();
  j["palette_size"] = cd.coloring.palette_size();
  return j;
}

ColoredDigraph colored_from_json(const Json& j) {
  if (!j.is_object()) throw_parse("colored digraph JSON must be an object");
  int n = require_int(j, "n");
  int palette = require_int(j, "palette_size");
  const Json& arcs_json = require_array(j, "arcs");
  const Json& colors_json = require_array(j, "colors");
  if (arcs_json.size() != colors_json.size())
    throw_parse("\"colors\" must align one-to-one with \"arcs\"");

  std::vector<std::pair<Arc, int>> entries;
  entries.reserve(arcs_json.size());
  for (size_t i = 0; i < arcs_json.size(); ++i) {
    if (!colors_json[i].is_number_integer())
      throw_parse("colors must be integers");
    entries.emplace_back(arc_from_json(arcs_json[i]),
                         colors_json[i].get<int>());
  }
  // Arcs may arrive in any order; the coloring is keyed by sorted arcs.
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Arc> arcs;
  std::vector<int> colors;
  for (const auto& [arc, color] : entries) {
    arcs.push_back(arc);
    colors.push_back(color);
  }
  Digraph d(n, arcs);
  ArcColoring coloring(d, std::move(colors), palette);
  return ColoredDigraph(std::move(d), std::move(coloring));
}

Json certificate_to_json(const RainbowCertificate& cert) {
  Json arr = Json::array();
  for (const CertificateEntry& e : cert) {
    Json entry;
    entry["from"] = e.from;
    entry["to"] = e.to;
    entry["path"] = e.path;
    arr.push_back(std::move(entry));
  }
  return arr;
}

RainbowCertificate certificate_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("entries") || !j["entries"].is_array())
      throw_parse("certificate object needs an \"entries\" array");
    arr = &j["entries"];
  } else if (!j.is_array()) {
    throw_parse("certificate JSON must be an array or {\"entries\": [...]}");
  }
  RainbowCertificate cert;
  for (const Json& entry : *arr) {
    if (!entry.is_object())
      throw_parse("certificate entries must be objects");
    CertificateEntry e;
    e.from = require_int(entry, "from");
    e.to = require_int(entry, "to");
    for (const Json& v : require_array(entry, "path")) {
      if (!v.is_number_integer()) throw_parse("path vertices must be integers");
      e.path.push_back(v.get<int>());
    }
    cert.push_back(std::move(e));
  }
  return cert;
}

Json proof_certificate_to_json(const ProofCertificate& pc) {
  Json j;
  j["n"] = pc.order;
  j["entries"] = certificate_to_json(pc.entries);
  Json notes = Json::array();
  for (const ProofNote& note : pc.notes) {
    Json n;
    n["kind"] = note.kind;
    n["detail"] = note.detail;
    notes.push_back(std::move(n));
  }
  j["notes"] = std::move(notes);
  return j;
}

Json validation_report_to_json(const ValidationReport& report) {
  Json j;
  j["entries_checked"] = report.entries_checked;
  Json violations = Json::array();
  for (const CertificateViolation& v : report.violations) {
    Json entry;
    entry["from"] = v.from;
    entry["to"] = v.to;
    entry["path"] = v.path;
    entry["reason"] = v.reason;
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  Json uncovered = Json::array();
  for (const VertexPair& p : report.uncovered)
    uncovered.push_back(Json::array({p.from, p.to}));
  j["uncovered"] = std::move(uncovered);
  j["ok"] = report.ok();
  return j;
}

Json rc_result_to_json(const RcResult& result) {
  Json j;
  j["value"] = result.value;
  j["exact"] = result.exact;
  j["colorings_examined"] = result.colorings_examined;
  if (result.witness) j["witness"] = colored_to_json(*result.witness);
  if (result.exact) j["certificate"] = certificate_to_json(result.certificate);
  return j;
}

}  // namespace rctour
