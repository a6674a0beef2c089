// Command-line front end.  Links only against the C API.
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "uop.h"

namespace {

struct Options {
  std::string prime = "5";
  std::string size = "20";
  std::string prec = "30";
  std::string count = "10";
  std::string qexp_terms = "20";
  std::string qprec;
  std::string digits = "10";
  std::string radius = "0";
  std::string format = "paper";
  std::string cache_dir;
  std::string suite = "all";
  std::string input;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("-p,--prime", o.prime, "prime (2, 3, 5, 7, 13)");
  cmd->add_option("-n,--size", o.size, "matrix truncation size");
  cmd->add_option("--prec", o.prec, "target absolute p-adic precision");
  cmd->add_option("-c,--count", o.count, "eigenfunctions / slopes requested");
  cmd->add_option("--qexp-terms", o.qexp_terms, "q-coefficients per eigenfunction");
  cmd->add_option("--qprec", o.qprec, "q-precision override (>= p*n + 1)");
  cmd->add_option("--digits", o.digits, "unit digits in rendered values");
  cmd->add_option("-r,--radius", o.radius, "radius as a rational 'a/b'");
  cmd->add_option("-f,--format", o.format, "output format: paper, json, csv");
  cmd->add_option("--cache-dir", o.cache_dir,
                  "matrix cache directory (default: UOP_CACHE_DIR)");
}

int apply(uop_ctx* ctx, const Options& o) {
  const std::pair<const char*, const std::string*> kv[] = {
      {"prime", &o.prime},           {"size", &o.size},
      {"prec", &o.prec},             {"count", &o.count},
      {"qexp-terms", &o.qexp_terms}, {"digits", &o.digits},
      {"radius", &o.radius},         {"format", &o.format},
      {"cache-dir", &o.cache_dir},   {"suite", &o.suite},
      {"input", &o.input},
  };
  for (const auto& [k, v] : kv)
    if (int rc = uop_ctx_set(ctx, k, v->c_str()); rc != UOP_OK) return rc;
  if (!o.qprec.empty())
    if (int rc = uop_ctx_set(ctx, "qprec", o.qprec.c_str()); rc != UOP_OK)
      return rc;
  return UOP_OK;
}

int finish(uop_ctx* ctx, int rc, char* out) {
  if (out) {
    std::fputs(out, stdout);
    uop_free_string(out);
  }
  if (rc != UOP_OK && rc != UOP_VERIFY_FAIL)
    std::fprintf(stderr, "error: %s\n", uop_ctx_last_error(ctx));
  uop_ctx_free(ctx);
  if (rc == UOP_USAGE) return 2;
  return rc == UOP_OK ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"U-operator matrices, slopes, eigenfunctions and spectral expansions"};
  app.require_subcommand(1);
  Options o;

  CLI::App* hm = app.add_subcommand(
      "hauptmodul", "modular polynomial, two-variable relation, recurrence kernel");
  CLI::App* sl = app.add_subcommand("slopes", "Newton-polygon slope table");
  CLI::App* ei = app.add_subcommand("eigen", "eigenvalue / q-expansion table");
  CLI::App* sp = app.add_subcommand("spectral", "spectral coefficients of a cusp function");
  CLI::App* ve = app.add_subcommand("verify", "consistency and conjecture suites");
  for (CLI::App* c : {hm, sl, ei, sp, ve}) add_common(c, o);
  sp->add_option("-i,--input", o.input,
                 "q-expansion file ('n coefficient' lines); default 1/j");
  ve->add_option("-s,--suite", o.suite,
                 "identities, recurrence, symmetry, support, ratgen, "
                 "factorization, diagonalizer, or all");

  CLI11_PARSE(app, argc, argv);

  uop_ctx* ctx = uop_ctx_new();
  if (!ctx) return 1;
  if (int rc = apply(ctx, o); rc != UOP_OK) return finish(ctx, rc, nullptr);

  char* out = nullptr;
  int rc = UOP_USAGE;
  if (hm->parsed()) rc = uop_run_hauptmodul(ctx, &out);
  else if (sl->parsed()) rc = uop_run_slopes(ctx, &out);
  else if (ei->parsed()) rc = uop_run_eigen(ctx, &out);
  else if (sp->parsed()) rc = uop_run_spectral(ctx, &out);
  else if (ve->parsed()) rc = uop_run_verify(ctx, &out);
  return finish(ctx, rc, out);
}
