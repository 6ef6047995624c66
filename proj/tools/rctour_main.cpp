// rctour command-line frontend. Talks to the core exclusively through the
// C API (rctour.h): JSON on stdout, diagnostics on stderr, exit codes
// 0 = success / verified, 1 = a check found a violation, 2 = input error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <rctour.h>

namespace {

// Owns strings handed out by the library.
struct CStr {
  char* ptr = nullptr;
  ~CStr() { rct_string_free(ptr); }
  const char* get() const { return ptr ? ptr : ""; }
};

struct DigraphHandle {
  rct_digraph* ptr = nullptr;
  ~DigraphHandle() { rct_digraph_free(ptr); }
};

struct ColoredHandle {
  rct_colored* ptr = nullptr;
  ~ColoredHandle() { rct_colored_free(ptr); }
};

int input_error() {
  std::cerr << "error: " << rct_last_error() << "\n";
  return 2;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open input file " << path << "\n";
    std::exit(2);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file " << path << "\n";
    std::exit(2);
  }
  out << text;
}

int emit_report(rct_status status, int ok, CStr& report,
                const std::string& out_path) {
  if (status != RCT_OK) return input_error();
  write_output(std::string(report.get()) + "\n", out_path);
  CStr text;
  if (rct_report_text(report.get(), &text.ptr) == RCT_OK)
    std::cerr << text.get();
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rainbow connectivity of tournaments: generators, checkers, "
               "an exact solver and desk-scale verification reports"};
  app.require_subcommand(1);

  std::string in_path, out_path, cert_path;
  int n = 0, n_max = 0, max_colors = 0, samples = 0, budget = 0, threads = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::vector<int> diffs;

  // gen
  auto* gen = app.add_subcommand("gen", "generate digraphs");
  gen->require_subcommand(1);
  auto* gen_circ = gen->add_subcommand("circulant", "circulant digraph C_n(S)");
  gen_circ->add_option("--n", n, "order")->required();
  gen_circ->add_option("--diffs", diffs, "difference set, comma separated")
      ->required()
      ->delimiter(',');
  gen_circ->add_option("--out", out_path, "output file (default stdout)");
  auto* gen_paper = gen->add_subcommand(
      "paper", "built-in 2-colored tournament of order n (rc = 2)");
  gen_paper->add_option("--n", n, "order, >= 6")->required();
  gen_paper->add_option("--out", out_path, "output file (default stdout)");

  // check
  auto* check = app.add_subcommand("check", "verify rainbow properties");
  check->require_subcommand(1);
  auto* check_rainbow = check->add_subcommand(
      "rainbow", "is the colored digraph rainbow connected?");
  check_rainbow->add_option("--in", in_path,
                            "colored digraph JSON (default stdin)");
  check_rainbow->add_option("--out", out_path, "output file (default stdout)");
  auto* check_cert = check->add_subcommand(
      "certificate", "validate a witness-path certificate");
  check_cert->add_option("--in", in_path,
                         "colored digraph JSON (default stdin)");
  check_cert->add_option("--cert", cert_path, "certificate JSON")->required();
  check_cert->add_option("--out", out_path, "output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "exact computations");
  solve->require_subcommand(1);
  auto* solve_rc =
      solve->add_subcommand("rc", "exact rainbow connection number");
  solve_rc->add_option("--in", in_path, "digraph JSON (default stdin)");
  solve_rc->add_option("--max-colors", max_colors,
                       "stop after this palette size");
  solve_rc->add_option("--threads", threads, "workers (0 = all cores)");
  solve_rc->add_option("--out", out_path, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "desk-scale reproductions");
  verify->require_subcommand(1);
  auto* v_t3 = verify->add_subcommand(
      "theorem3", "rc = 2 constructions for every order in 6..n-max");
  v_t3->add_option("--n-max", n_max, "largest order, in [6, 64]")->required();
  v_t3->add_option("--threads", threads, "workers (0 = all cores)");
  v_t3->add_option("--out", out_path, "output file (default stdout)");
  auto* v_small = verify->add_subcommand(
      "small-cases", "exhaust orders 4 and 5: no 2-coloring works");
  v_small->add_option("--threads", threads, "workers (0 = all cores)");
  v_small->add_option("--out", out_path, "output file (default stdout)");
  auto* v_band =
      verify->add_subcommand("band", "2 <= rc <= n-1 on strong tournaments");
  v_band->add_option("--n", n, "order, in [5, 7]")->required();
  v_band->add_option("--samples", samples, "random draws");
  v_band->add_option("--seed", seed, "RNG seed");
  v_band->add_flag("--exhaustive", exhaustive,
                   "sweep all tournaments (order 5 only)");
  v_band->add_option("--threads", threads, "workers (0 = all cores)");
  v_band->add_option("--out", out_path, "output file (default stdout)");
  auto* v_spec = verify->add_subcommand(
      "spectrum", "hunt witnesses for each rc value k in 3..n-1");
  v_spec->add_option("--n", n, "order, 5 or 6")->required();
  v_spec->add_option("--budget", budget, "random draws at order 6");
  v_spec->add_option("--seed", seed, "RNG seed");
  v_spec->add_option("--threads", threads, "workers (0 = all cores)");
  v_spec->add_option("--out", out_path, "output file (default stdout)");

  // export
  auto* exp = app.add_subcommand("export", "format conversions");
  exp->require_subcommand(1);
  auto* exp_dot = exp->add_subcommand(
      "dot", "Graphviz text; color 0 dashed, color 1 solid");
  exp_dot->add_option("--in", in_path,
                      "digraph or colored digraph JSON (default stdin)");
  exp_dot->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (gen_circ->parsed()) {
    DigraphHandle g;
    if (rct_circulant(n, diffs.data(), static_cast<int>(diffs.size()),
                      &g.ptr) != RCT_OK)
      return input_error();
    CStr json;
    if (rct_digraph_to_json(g.ptr, &json.ptr) != RCT_OK) return input_error();
    write_output(json.get(), out_path);
    return 0;
  }

  if (gen_paper->parsed()) {
    ColoredHandle cd;
    if (rct_construction(n, &cd.ptr) != RCT_OK) return input_error();
    CStr json;
    if (rct_colored_to_json(cd.ptr, &json.ptr) != RCT_OK)
      return input_error();
    write_output(json.get(), out_path);
    return 0;
  }

  if (check_rainbow->parsed()) {
    const std::string input = read_input(in_path);
    ColoredHandle cd;
    if (rct_colored_from_json(input.c_str(), &cd.ptr) != RCT_OK)
      return input_error();
    int connected = 0;
    CStr detail;
    if (rct_check_rainbow(cd.ptr, &connected, &detail.ptr) != RCT_OK)
      return input_error();
    write_output(detail.get(), out_path);
    if (!connected) std::cerr << "not rainbow connected\n";
    return connected ? 0 : 1;
  }

  if (check_cert->parsed()) {
    const std::string input = read_input(in_path);
    const std::string cert = read_input(cert_path);
    ColoredHandle cd;
    if (rct_colored_from_json(input.c_str(), &cd.ptr) != RCT_OK)
      return input_error();
    int ok = 0;
    CStr report;
    if (rct_validate_certificate(cd.ptr, cert.c_str(), &ok, &report.ptr) !=
        RCT_OK)
      return input_error();
    write_output(report.get(), out_path);
    if (!ok) std::cerr << "certificate has violations or uncovered pairs\n";
    return ok ? 0 : 1;
  }

  if (solve_rc->parsed()) {
    const std::string input = read_input(in_path);
    DigraphHandle g;
    if (rct_digraph_from_json(input.c_str(), &g.ptr) != RCT_OK)
      return input_error();
    CStr result;
    if (rct_solve_rc(g.ptr, max_colors, threads, &result.ptr) != RCT_OK)
      return input_error();
    write_output(result.get(), out_path);
    return 0;
  }

  if (v_t3->parsed()) {
    int ok = 0;
    CStr report;
    rct_status status = rct_verify_theorem3(n_max, threads, &ok, &report.ptr);
    return emit_report(status, ok, report, out_path);
  }

  if (v_small->parsed()) {
    int ok = 0;
    CStr report;
    rct_status status = rct_verify_small_cases(threads, &ok, &report.ptr);
    return emit_report(status, ok, report, out_path);
  }

  if (v_band->parsed()) {
    int ok = 0;
    CStr report;
    rct_status status = rct_verify_band(n, samples, exhaustive ? 1 : 0, seed,
                                        threads, &ok, &report.ptr);
    return emit_report(status, ok, report, out_path);
  }

  if (v_spec->parsed()) {
    int ok = 0;
    CStr report;
    rct_status status =
        rct_search_spectrum(n, budget, seed, threads, &ok, &report.ptr);
    return emit_report(status, ok, report, out_path);
  }

  if (exp_dot->parsed()) {
    const std::string input = read_input(in_path);
    CStr dot;
    if (rct_export_dot(input.c_str(), &dot.ptr) != RCT_OK)
      return input_error();
    write_output(dot.get(), out_path);
    return 0;
  }

  return 2;
}
