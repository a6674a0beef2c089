/* C interface to the U-operator library.
 *
 * All functionality is reached through an opaque context holding a key/value
 * configuration.  Commands return a malloc'd report string through an out
 * parameter; release it with uop_free_string.  On any nonzero status the
 * context stores a message retrievable with uop_ctx_last_error.
 */
#ifndef UOP_H
#define UOP_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. */
#define UOP_OK 0          /* success */
#define UOP_VERIFY_FAIL 1 /* a verification suite reported failures */
#define UOP_USAGE 2       /* bad key, value, or configuration */
#define UOP_INTERNAL 3    /* computation error (precision, invariants, io) */

typedef struct uop_ctx uop_ctx;

uop_ctx* uop_ctx_new(void);
void uop_ctx_free(uop_ctx* ctx);

/* Keys: prime, size, prec, count, qexp-terms, qprec, digits, radius,
 * format, cache-dir, suite, input.  Numeric values are decimal strings. */
int uop_ctx_set(uop_ctx* ctx, const char* key, const char* value);

/* Message for the most recent failing call; empty string if none. */
const char* uop_ctx_last_error(const uop_ctx* ctx);

/* Commands.  *out receives a heap-allocated report (also on
 * UOP_VERIFY_FAIL, where the report lists the failing suites). */
int uop_run_hauptmodul(uop_ctx* ctx, char** out);
int uop_run_slopes(uop_ctx* ctx, char** out);
int uop_run_eigen(uop_ctx* ctx, char** out);
int uop_run_spectral(uop_ctx* ctx, char** out);
int uop_run_verify(uop_ctx* ctx, char** out);

void uop_free_string(char* s);

#ifdef __cplusplus
}
#endif

#endif
