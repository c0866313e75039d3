// Command-line front end for the geulerian shared library. All computation
// happens behind the C API; this binary only parses flags, routes output and
// maps error codes to exit codes:
//   0 success, 1 verification failure, 2 usage error, 3 enumeration cap
//   exceeded (4 for unexpected internal failures).

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "geulerian.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitInternal = 4;

int exit_code_for(int geu_code) {
  switch (geu_code) {
    case GEU_OK: return kExitOk;
    case GEU_ERR_CAP_EXCEEDED: return kExitCapExceeded;
    case GEU_ERR_NOMEM:
    case GEU_ERR_INTERNAL: return kExitInternal;
    default: return kExitUsage;
  }
}

struct CtxDeleter {
  void operator()(geu_ctx* ctx) const { geu_ctx_free(ctx); }
};

struct StringDeleter {
  void operator()(char* s) const { geu_string_free(s); }
};

using CtxPtr = std::unique_ptr<geu_ctx, CtxDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int format_code(const std::string& name) {
  if (name == "plain") return GEU_FORMAT_PLAIN;
  if (name == "csv") return GEU_FORMAT_CSV;
  return GEU_FORMAT_JSON;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kExitUsage;
  }
  out << text;
  return kExitOk;
}

int report_error(geu_ctx* ctx, int code) {
  std::cerr << "error: " << geu_ctx_error_message(ctx) << "\n";
  return exit_code_for(code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Eulerian-number tables, permutation statistics and theorem checks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  std::string format = "plain";
  std::string out_path;
  int max_enum = 0;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write output to a file instead of stdout");
  app.add_option("--max-enum", max_enum, "Override the enumeration cap (default 12)");

  auto* table = app.add_subcommand("table", "Emit exact number tables");
  std::string kind;
  int t_n = 0, t_max_n = 0, t_k = -1, t_j = -1;
  std::string t_a, t_d;
  table->add_option("--kind", kind, "eulerian | general | cnk")->required();
  table->add_option("--n", t_n, "Single row size n");
  table->add_option("--max-n", t_max_n, "Emit rows n = 1..max-n");
  table->add_option("--k", t_k, "Fix the index k");
  table->add_option("--j", t_j, "Fix the index j (cnk tables)");
  table->add_option("--a", t_a, "Progression start a (general tables)");
  table->add_option("--d", t_d, "Progression step d (general tables)");

  auto* verify = app.add_subcommand("verify", "Run identity/theorem suites");
  std::string suite = "all";
  int v_max_n = 0;
  verify->add_option("--suite", suite, "Suite name or 'all'")->capture_default_str();
  verify->add_option("--max-n", v_max_n, "Largest n to sweep (0 = per-suite default)");

  auto* stats = app.add_subcommand("stats", "Statistics and bijections of one permutation");
  std::string word_text;
  stats->add_option("word", word_text, "Permutation word, e.g. 5243716 or 5,2,4,3,7,1,6")
      ->required();

  auto* bijection = app.add_subcommand("bijection", "List one insertion-map class");
  std::string side = "A";
  int b_n = 0, b_k = 0;
  bijection->add_option("--side", side, "A (p1 < pn classes) or B (p1 > pn classes)")
      ->check(CLI::IsMember({"A", "B"}))
      ->required();
  bijection->add_option("--n", b_n, "Target class size n")->required();
  bijection->add_option("--k", b_k, "Target weak-excedance count k")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  CtxPtr ctx(geu_ctx_new());
  if (!ctx) {
    std::cerr << "error: out of memory\n";
    return kExitInternal;
  }
  if (max_enum > 0) {
    const int rc = geu_ctx_set_enum_cap(ctx.get(), max_enum);
    if (rc != GEU_OK) return report_error(ctx.get(), rc);
  }
  const int fmt = format_code(format);

  if (table->parsed()) {
    char* rendered = nullptr;
    const int rc = geu_render_table(ctx.get(), kind.c_str(), t_n, t_max_n, t_k, t_j,
                                    t_a.empty() ? nullptr : t_a.c_str(),
                                    t_d.empty() ? nullptr : t_d.c_str(), fmt, &rendered);
    if (rc != GEU_OK) return report_error(ctx.get(), rc);
    StringPtr guard(rendered);
    return write_output(rendered, out_path);
  }

  if (verify->parsed()) {
    char* rendered = nullptr;
    int all_passed = 0;
    const int rc =
        geu_run_verify(ctx.get(), suite.c_str(), v_max_n, fmt, &rendered, &all_passed);
    if (rc != GEU_OK) return report_error(ctx.get(), rc);
    StringPtr guard(rendered);
    const int io = write_output(rendered, out_path);
    if (io != kExitOk) return io;
    return all_passed ? kExitOk : kExitVerifyFailed;
  }

  if (stats->parsed()) {
    int word[4096];
    int n = 0;
    int rc = geu_parse_word(ctx.get(), word_text.c_str(), word, 4096, &n);
    if (rc != GEU_OK) return report_error(ctx.get(), rc);
    char* rendered = nullptr;
    rc = geu_render_stats(ctx.get(), word, n, fmt, &rendered);
    if (rc != GEU_OK) return report_error(ctx.get(), rc);
    StringPtr guard(rendered);
    return write_output(rendered, out_path);
  }

  // bijection
  char* rendered = nullptr;
  const int rc = geu_render_bijection(ctx.get(), side == "A" ? GEU_SIDE_A : GEU_SIDE_B, b_n,
                                      b_k, fmt, &rendered);
  if (rc != GEU_OK) return report_error(ctx.get(), rc);
  StringPtr guard(rendered);
  return write_output(rendered, out_path);
}
