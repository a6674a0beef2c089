#include "uop.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "uop/commands.hpp"
#include "uop/error.hpp"

struct uop_ctx {
  uop::RunConfig cfg;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool parse_long(const char* value, long& out) {
  if (!value || !*value) return false;
  char* end = nullptr;
  long v = std::strtol(value, &end, 10);
  if (*end) return false;
  out = v;
  return true;
}

template <typename Fn>
int run(uop_ctx* ctx, char** out, Fn fn) {
  if (!ctx || !out) return UOP_USAGE;
  *out = nullptr;
  ctx->last_error.clear();
  try {
    return fn();
  } catch (const uop::Error& e) {
    ctx->last_error = e.what();
    bool usage = e.code() == uop::ErrorCode::Usage ||
                 e.code() == uop::ErrorCode::UnsupportedPrime ||
                 e.code() == uop::ErrorCode::IrrationalScale;
    return usage ? UOP_USAGE : UOP_INTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return UOP_INTERNAL;
  }
}

}  // namespace

extern "C" {

uop_ctx* uop_ctx_new(void) { return new (std::nothrow) uop_ctx; }

void uop_ctx_free(uop_ctx* ctx) { delete ctx; }

int uop_ctx_set(uop_ctx* ctx, const char* key, const char* value) {
  if (!ctx || !key || !value) return UOP_USAGE;
  ctx->last_error.clear();
  std::string k = key;
  uop::RunConfig& c = ctx->cfg;
  bool ok = true;
  if (k == "prime")
    ok = parse_long(value, c.prime);
  else if (k == "size")
    ok = parse_long(value, c.size);
  else if (k == "prec")
    ok = parse_long(value, c.prec);
  else if (k == "count")
    ok = parse_long(value, c.count);
  else if (k == "qexp-terms")
    ok = parse_long(value, c.qexp_terms);
  else if (k == "qprec")
    ok = parse_long(value, c.qprec);
  else if (k == "digits")
    ok = parse_long(value, c.render_digits);
  else if (k == "radius")
    c.radius = value;
  else if (k == "format")
    c.format = value;
  else if (k == "cache-dir")
    c.cache_dir = value;
  else if (k == "suite")
    c.suite = value;
  else if (k == "input")
    c.input = value;
  else
    ok = false;
  if (!ok) {
    ctx->last_error = "bad key or value: " + k;
    return UOP_USAGE;
  }
  return UOP_OK;
}

const char* uop_ctx_last_error(const uop_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

int uop_run_hauptmodul(uop_ctx* ctx, char** out) {
  return run(ctx, out, [&] {
    *out = dup_string(uop::cmd_hauptmodul(ctx->cfg));
    return UOP_OK;
  });
}

int uop_run_slopes(uop_ctx* ctx, char** out) {
  return run(ctx, out, [&] {
    *out = dup_string(uop::cmd_slopes(ctx->cfg));
    return UOP_OK;
  });
}

int uop_run_eigen(uop_ctx* ctx, char** out) {
  return run(ctx, out, [&] {
    *out = dup_string(uop::cmd_eigen(ctx->cfg));
    return UOP_OK;
  });
}

int uop_run_spectral(uop_ctx* ctx, char** out) {
  return run(ctx, out, [&] {
    *out = dup_string(uop::cmd_spectral(ctx->cfg));
    return UOP_OK;
  });
}

int uop_run_verify(uop_ctx* ctx, char** out) {
  return run(ctx, out, [&] {
    uop::VerifyResult r = uop::cmd_verify(ctx->cfg);
    *out = dup_string(r.output);
    return r.pass ? UOP_OK : UOP_VERIFY_FAIL;
  });
}

void uop_free_string(char* s) { std::free(s); }

}  // extern "C"
