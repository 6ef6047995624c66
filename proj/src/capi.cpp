#include "rctour.h"

#include <cstring>
#include <new>
#include <string>

#include "rctour/catalog.hpp"
#include "rctour/constructions.hpp"
#include "rctour/dot.hpp"
#include "rctour/json_io.hpp"
#include "rctour/solver.hpp"

namespace {

thread_local std::string g_last_error;

rctour::ColoredDigraph* unwrap(rct_colored* cd) {
  return reinterpret_cast<rctour::ColoredDigraph*>(cd);
}
const rctour::ColoredDigraph* unwrap(const rct_colored* cd) {
  return reinterpret_cast<const rctour::ColoredDigraph*>(cd);
}
rctour::Digraph* unwrap(rct_digraph* g) {
  return reinterpret_cast<rctour::Digraph*>(g);
}
const rctour::Digraph* unwrap(const rct_digraph* g) {
  return reinterpret_cast<const rctour::Digraph*>(g);
}

rct_status status_code(rctour::Status s) {
  switch (s) {
    case rctour::Status::ok: return RCT_OK;
    case rctour::Status::invalid_argument: return RCT_ERR_INVALID_ARGUMENT;
    case rctour::Status::domain: return RCT_ERR_DOMAIN;
    case rctour::Status::parse: return RCT_ERR_PARSE;
    case rctour::Status::limit: return RCT_ERR_LIMIT;
  }
  return RCT_ERR_UNKNOWN;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Wraps the body in the catch-all boundary; exceptions never cross the ABI.
template <typename Fn>
rct_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const rctour::Error& e) {
    g_last_error = e.what();
    return status_code(e.status());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RCT_ERR_UNKNOWN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RCT_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown error";
    return RCT_ERR_UNKNOWN;
  }
}

rct_status require(bool cond, const char* message) {
  if (cond) return RCT_OK;
  g_last_error = message;
  return RCT_ERR_INVALID_ARGUMENT;
}

// Reports render compact (they can be large); small artifacts pretty-print.
std::string dump_report(const rctour::Json& j) { return j.dump(); }
std::string dump_pretty(const rctour::Json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

const char* rct_version(void) { return "1.0.0"; }

const char* rct_last_error(void) { return g_last_error.c_str(); }

void rct_string_free(char* s) { delete[] s; }

rct_status rct_circulant(int order, const int* diffs, int diff_count,
                         rct_digraph** out) {
  if (require(out && (diffs || diff_count == 0), "null argument") != RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    rctour::CirculantSpec spec{order, std::vector<int>(diffs, diffs + diff_count)};
    *out = reinterpret_cast<rct_digraph*>(
        new rctour::Digraph(rctour::make_circulant(spec)));
    return RCT_OK;
  });
}

rct_status rct_digraph_from_json(const char* json, rct_digraph** out) {
  if (require(json && out, "null argument") != RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    rctour::Digraph d = rctour::digraph_from_json(rctour::parse_json(json));
    *out = reinterpret_cast<rct_digraph*>(new rctour::Digraph(std::move(d)));
    return RCT_OK;
  });
}

rct_status rct_digraph_to_json(const rct_digraph* g, char** out_json) {
  if (require(g && out_json, "null argument") != RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_json = copy_string(dump_pretty(rctour::digraph_to_json(*unwrap(g))));
    return RCT_OK;
  });
}

void rct_digraph_free(rct_digraph* g) { delete unwrap(g); }

int rct_digraph_order(const rct_digraph* g) {
  return g ? unwrap(g)->order() : 0;
}

int rct_digraph_arc_count(const rct_digraph* g) {
  return g ? unwrap(g)->arc_count() : 0;
}

rct_status rct_is_tournament(const rct_digraph* g, int* out) {
  if (require(g && out, "null argument") != RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = rctour::is_tournament(*unwrap(g)) ? 1 : 0;
    return RCT_OK;
  });
}

rct_status rct_is_strong(const rct_digraph* g, int* out) {
  if (require(g && out, "null argument") != RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = rctour::is_strong(*unwrap(g)) ? 1 : 0;
    return RCT_OK;
  });
}

rct_status rct_construction(int order, rct_colored** out) {
  if (require(out, "null argument") != RCT_OK) return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = reinterpret_cast<rct_colored*>(
        new rctour::ColoredDigraph(rctour::rc2_construction(order)));
    return RCT_OK;
  });
}

rct_status rct_colored_from_json(const char* json, rct_colored** out) {
  if (require(json && out, "null argument") != RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    rctour::ColoredDigraph cd =
        rctour::colored_from_json(rctour::parse_json(json));
    *out = reinterpret_cast<rct_colored*>(
        new rctour::ColoredDigraph(std::move(cd)));
    return RCT_OK;
  });
}

rct_status rct_colored_to_json(const rct_colored* cd, char** out_json) {
  if (require(cd && out_json, "null argument") != RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_json = copy_string(dump_pretty(rctour::colored_to_json(*unwrap(cd))));
    return RCT_OK;
  });
}

void rct_colored_free(rct_colored* cd) { delete unwrap(cd); }

rct_status rct_check_rainbow(const rct_colored* cd, int* connected,
                             char** detail_json) {
  if (require(cd && connected && detail_json, "null argument") != RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    rctour::RainbowCheck check = rctour::is_rainbow_connected(*unwrap(cd));
    *connected = check.connected ? 1 : 0;
    if (check.connected) {
      *detail_json =
          copy_string(dump_pretty(rctour::certificate_to_json(check.certificate)));
    } else {
      rctour::Json j;
      j["connected"] = false;
      j["failing_pair"] =
          rctour::Json::array({check.failing_pair->from, check.failing_pair->to});
      *detail_json = copy_string(dump_pretty(j));
    }
    return RCT_OK;
  });
}

rct_status rct_solve_rc(const rct_digraph* g, int max_colors, int threads,
                        char** result_json) {
  if (require(g && result_json, "null argument") != RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    rctour::SolverOptions opt;
    if (max_colors > 0) opt.max_colors = max_colors;
    opt.threads = threads;
    rctour::RcResult rc = rctour::rc_exact(*unwrap(g), opt);
    *result_json = copy_string(dump_pretty(rctour::rc_result_to_json(rc)));
    return RCT_OK;
  });
}

rct_status rct_proof_certificate(int order, char** certificate_json) {
  if (require(certificate_json, "null argument") != RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    rctour::ProofCertificate pc = rctour::proof_certificate(order);
    *certificate_json =
        copy_string(dump_pretty(rctour::proof_certificate_to_json(pc)));
    return RCT_OK;
  });
}

rct_status rct_validate_certificate(const rct_colored* cd,
                                    const char* certificate_json, int* ok,
                                    char** report_json) {
  if (require(cd && certificate_json && ok && report_json, "null argument") !=
      RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    rctour::RainbowCertificate cert =
        rctour::certificate_from_json(rctour::parse_json(certificate_json));
    rctour::ValidationReport report =
        rctour::validate_certificate(*unwrap(cd), cert);
    *ok = report.ok() ? 1 : 0;
    *report_json =
        copy_string(dump_pretty(rctour::validation_report_to_json(report)));
    return RCT_OK;
  });
}

rct_status rct_verify_theorem3(int n_max, int threads, int* ok,
                               char** report_json) {
  if (require(ok && report_json, "null argument") != RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    rctour::VerificationReport report = rctour::verify_theorem3(n_max, threads);
    *ok = report.ok ? 1 : 0;
    *report_json = copy_string(dump_report(report.doc));
    return RCT_OK;
  });
}

rct_status rct_verify_small_cases(int threads, int* ok, char** report_json) {
  if (require(ok && report_json, "null argument") != RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    rctour::VerificationReport report = rctour::verify_small_cases(threads);
    *ok = report.ok ? 1 : 0;
    *report_json = copy_string(dump_report(report.doc));
    return RCT_OK;
  });
}

rct_status rct_verify_band(int order, int samples, int exhaustive,
                           uint64_t seed, int threads, int* ok,
                           char** report_json) {
  if (require(ok && report_json, "null argument") != RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    rctour::VerificationReport report = rctour::verify_theorem1_band(
        order, samples, seed, exhaustive != 0, threads);
    *ok = report.ok ? 1 : 0;
    *report_json = copy_string(dump_report(report.doc));
    return RCT_OK;
  });
}

rct_status rct_search_spectrum(int order, int budget, uint64_t seed,
                               int threads, int* ok, char** report_json) {
  if (require(ok && report_json, "null argument") != RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    rctour::VerificationReport report =
        rctour::search_rc_spectrum(order, budget, seed, threads);
    *ok = report.ok ? 1 : 0;
    *report_json = copy_string(dump_report(report.doc));
    return RCT_OK;
  });
}

rct_status rct_report_text(const char* report_json, char** text) {
  if (require(report_json && text, "null argument") != RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    rctour::VerificationReport report;
    report.doc = rctour::parse_json(report_json);
    report.ok = report.doc.value("ok", false);
    *text = copy_string(report.render_text());
    return RCT_OK;
  });
}

rct_status rct_export_dot(const char* json, char** dot_text) {
  if (require(json && dot_text, "null argument") != RCT_OK)
    return RCT_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    rctour::Json j = rctour::parse_json(json);
    std::string dot =
        j.contains("colors") ? rctour::to_dot(rctour::colored_from_json(j))
                             : rctour::to_dot(rctour::digraph_from_json(j));
    *dot_text = copy_string(dot);
    return RCT_OK;
  });
}

}  // extern "C"
