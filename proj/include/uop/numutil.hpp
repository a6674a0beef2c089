#ifndef UOP_NUMUTIL_HPP
#define UOP_NUMUTIL_HPP

#include <gmpxx.h>

#include <limits>
#include <string>

#include "uop/error.hpp"

namespace uop {

using Int = mpz_class;
using Rat = mpq_class;

// Sentinel for the valuation of zero.
inline constexpr long kValInf = std::numeric_limits<long>::max();

inline bool is_supported_prime(long p) {
  return p == 2 || p == 3 || p == 5 || p == 7 || p == 13;
}

inline void require_supported_prime(long p) {
  if (!is_supported_prime(p))
    fail(ErrorCode::UnsupportedPrime,
         "prime must be one of 2, 3, 5, 7, 13 (got " + std::to_string(p) + ")");
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int pow_int(long base, unsigned long e) { return pow_int(Int(base), e); }

// p^e for possibly negative e, as an exact rational.
inline Rat pow_rat(long base, long e) {
  if (e >= 0) return Rat(pow_int(base, static_cast<unsigned long>(e)));
  Rat r(1, pow_int(base, static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// nu_p(n!) by Legendre's formula.
inline long factorial_valuation(unsigned long n, long p) {
  long v = 0;
  unsigned long q = n;
  while (q >= static_cast<unsigned long>(p)) {
    q /= static_cast<unsigned long>(p);
    v += static_cast<long>(q);
  }
  return v;
}

// nu_p of a nonzero integer.
inline long valuation_int(const Int& x, long p) {
  if (x == 0) return kValInf;
  Int t = abs(x);
  long v = 0;
  Int q, r;
  Int P(p);
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), P.get_mpz_t());
    if (r != 0) break;
    t = q;
    ++v;
  }
  return v;
}

// nu_p of an exact rational; kValInf for zero.
inline long valuation_rat(const Rat& x, long p) {
  if (x == 0) return kValInf;
  return valuation_int(x.get_num(), p) - valuation_int(x.get_den(), p);
}

inline Rat rat_from_string(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& x) { return x.get_str(); }

}  // namespace uop

#endif
