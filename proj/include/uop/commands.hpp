#ifndef UOP_COMMANDS_HPP
#define UOP_COMMANDS_HPP

#include <string>

#include "uop/numutil.hpp"

namespace uop {

// Shared options for the high-level commands.  Fields that a command does
// not use are ignored.
struct RunConfig {
  long prime = 5;
  long size = 20;          // matrix truncation n
  long prec = 30;          // target absolute p-adic precision
  long count = 10;         // eigenfunctions / slopes requested
  long qexp_terms = 20;    // q-coefficients per eigenfunction
  long qprec = 0;          // q-precision override; 0 = automatic (pn + 1)
  long render_digits = 10; // unit digits shown in paper-style output
  std::string radius = "0";
  std::string format = "paper";  // paper | json | csv
  std::string cache_dir;         // empty: use UOP_CACHE_DIR, else no cache
  std::string suite = "all";     // verify: which suite(s)
  std::string input;             // spectral: q-expansion file, empty = 1/j
};

// Modular polynomial, two-variable relation and recurrence kernel.
std::string cmd_hauptmodul(const RunConfig& cfg);

// Newton-polygon slopes of det(I - tU_n), with the closed-form comparison
// where one is known.
std::string cmd_slopes(const RunConfig& cfg);

// Eigenvalue/slope/q-expansion table for the first `count` eigenfunctions.
std::string cmd_eigen(const RunConfig& cfg);

// Spectral coefficients of a cuspidal function (default 1/j) and the
// valuation growth of the truncation residuals.
std::string cmd_spectral(const RunConfig& cfg);

struct VerifyResult {
  std::string output;
  bool pass = false;
};

// Suites: identities, recurrence, symmetry, support, ratgen,
// factorization, diagonalizer, or all.
VerifyResult cmd_verify(const RunConfig& cfg);

// Paper-style scalar rendering helper shared by commands and tests:
// unit mod p^digits, valuation shown as a power-of-p prefix.
std::string render_value(long p, long val, const Int& unit_mod, long digits);

}  // namespace uop

#endif
