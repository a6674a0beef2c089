#include <doctest.h>

#include <cstring>
#include <string>

#include "uop.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  uop_free_string(s);
  return out;
}

}  // namespace

TEST_CASE("context lifecycle and configuration") {
  uop_ctx* ctx = uop_ctx_new();
  REQUIRE(ctx != nullptr);
  CHECK(uop_ctx_set(ctx, "prime", "2") == UOP_OK);
  CHECK(uop_ctx_set(ctx, "size", "8") == UOP_OK);
  CHECK(uop_ctx_set(ctx, "no-such-key", "1") == UOP_USAGE);
  CHECK(uop_ctx_set(ctx, "size", "eight") == UOP_USAGE);
  CHECK(std::strlen(uop_ctx_last_error(ctx)) > 0);
  uop_ctx_free(ctx);
}

TEST_CASE("hauptmodul through the C surface") {
  uop_ctx* ctx = uop_ctx_new();
  uop_ctx_set(ctx, "prime", "2");
  char* out = nullptr;
  CHECK(uop_run_hauptmodul(ctx, &out) == UOP_OK);
  std::string s = take(out);
  CHECK(s.find("[[48, 1],") != std::string::npos);
  uop_ctx_free(ctx);
}

TEST_CASE("usage errors are mapped to UOP_USAGE") {
  uop_ctx* ctx = uop_ctx_new();
  uop_ctx_set(ctx, "prime", "11");  // unsupported prime
  char* out = nullptr;
  int rc = uop_run_slopes(ctx, &out);
  CHECK(rc == UOP_USAGE);
  CHECK(std::strlen(uop_ctx_last_error(ctx)) > 0);
  if (out) uop_free_string(out);

  uop_ctx_set(ctx, "prime", "2");
  uop_ctx_set(ctx, "format", "xml");
  rc = uop_run_slopes(ctx, &out);
  CHECK(rc == UOP_USAGE);
  if (out) uop_free_string(out);
  uop_ctx_free(ctx);
}

TEST_CASE("verify suite reports pass") {
  uop_ctx* ctx = uop_ctx_new();
  uop_ctx_set(ctx, "prime", "2");
  uop_ctx_set(ctx, "size", "10");
  uop_ctx_set(ctx, "prec", "12");
  uop_ctx_set(ctx, "suite", "symmetry");
  char* out = nullptr;
  CHECK(uop_run_verify(ctx, &out) == UOP_OK);
  std::string s = take(out);
  CHECK(s.find("symmetry: pass") != std::string::npos);
  CHECK(s.find("ALL PASS") != std::string::npos);

  uop_ctx_set(ctx, "suite", "no-such-suite");
  int rc = uop_run_verify(ctx, &out);
  CHECK(rc == UOP_USAGE);
  if (out) uop_free_string(out);
  uop_ctx_free(ctx);
}
