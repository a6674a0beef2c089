#ifndef UOP_QSERIES_HPP
#define UOP_QSERIES_HPP

#include <string>
#include <vector>

#include "uop/numutil.hpp"

namespace uop {

// Exact truncated power series in q over the rationals.  Coefficients are
// known for exponents < trunc(); lowest_order() may be negative (1/Delta,
// j, ...).  The leading coefficient is nonzero unless the series is
// identically zero up to the truncation.
class QSeries {
 public:
  QSeries() = default;
  // Zero series known through exponents < trunc.
  static QSeries zero(long trunc);
  static QSeries one(long trunc);
  // c * q^n
  static QSeries monomial(const Rat& c, long n, long trunc);
  static QSeries from_coeffs(long lowest_order, std::vector<Rat> coeffs);

  long lowest_order() const { return lo_; }
  long trunc() const { return trunc_; }
  bool is_zero() const { return c_.empty(); }
  // Coefficient of q^n; n must be < trunc().
  Rat coeff(long n) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries operator-() const;
  QSeries scaled(const Rat& c) const;
  // Multiplicative inverse; leading coefficient must be a unit (nonzero).
  QSeries inverse() const;
  QSeries pow(long e) const;  // e >= 0
  QSeries truncated(long new_trunc) const;

  bool all_integer() const;

  // One line per exponent: "n: coefficient".
  std::string dump() const;

 private:
  void normalize();

  long lo_ = 0;
  long trunc_ = 0;
  std::vector<Rat> c_;  // c_[k] = coefficient of q^(lo_+k); size trunc_-lo_
};

// prod_{n>=1} (1 - q^{p n})^e (1 - q^n)^{-e}, optionally with a q
// prefactor, truncated at order T.
QSeries dedekind_style_product(long p, long e, long T, bool q_prefactor = false);

QSeries delta(long T);
QSeries eisenstein(int k, long T);  // k in {2, 4, 6}
QSeries j_invariant(long T);

// f_p = q prod (1-q^{pn})^{24/(p-1)} (1-q^n)^{-24/(p-1)}
QSeries hauptmodul_fp(long p, long T);

// U: sum a_n q^n -> sum a_{pn} q^n.  V: q -> q^p.
QSeries U_on_qexp(const QSeries& h, long p);
QSeries V_on_qexp(const QSeries& h, long p);

struct IdentityReport {
  bool pass = true;
  long first_fail_order = 0;
  int failing_identity = 0;  // 1 or 2 when pass == false
  long orders_checked = 0;
};

// Checks the two level-2 eta-quotient identities tying the 2-stabilised
// weight-2 Eisenstein series and E_6 to the level-2 hauptmodul,
// coefficientwise through order T.
IdentityReport verify_weight_identities(long T);

}  // namespace uop

#endif
