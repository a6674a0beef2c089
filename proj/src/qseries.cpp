#include "uop/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace uop {

void QSeries::normalize() {
  size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    lo_ += static_cast<long>(k);
  }
  if (c_.empty()) lo_ = trunc_;
}

QSeries QSeries::zero(long trunc) {
  QSeries s;
  s.lo_ = trunc;
  s.trunc_ = trunc;
  return s;
}

QSeries QSeries::one(long trunc) { return monomial(Rat(1), 0, trunc); }

QSeries QSeries::monomial(const Rat& c, long n, long trunc) {
  if (c == 0 || n >= trunc) return zero(trunc);
  QSeries s;
  s.lo_ = n;
  s.trunc_ = trunc;
  s.c_.assign(static_cast<size_t>(trunc - n), Rat(0));
  s.c_[0] = c;
  return s;
}

QSeries QSeries::from_coeffs(long lowest_order, std::vector<Rat> coeffs) {
  QSeries s;
  s.lo_ = lowest_order;
  s.trunc_ = lowest_order + static_cast<long>(coeffs.size());
  s.c_ = std::move(coeffs);
  s.normalize();
  return s;
}

Rat QSeries::coeff(long n) const {
  if (n >= trunc_)
    fail(ErrorCode::TruncationMismatch,
         "coefficient of q^" + std::to_string(n) + " beyond truncation " +
             std::to_string(trunc_));
  if (n < lo_) return Rat(0);
  return c_[static_cast<size_t>(n - lo_)];
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  long trunc = std::min(a.trunc_, b.trunc_);
  long lo = std::min(a.is_zero() ? trunc : a.lo_, b.is_zero() ? trunc : b.lo_);
  lo = std::min(lo, trunc);
  QSeries s;
  s.lo_ = lo;
  s.trunc_ = trunc;
  s.c_.assign(static_cast<size_t>(trunc - lo), Rat(0));
  for (long n = lo; n < trunc; ++n) {
    Rat v(0);
    if (n >= a.lo_ && n < a.trunc_) v += a.c_[static_cast<size_t>(n - a.lo_)];
    if (n >= b.lo_ && n < b.trunc_) v += b.c_[static_cast<size_t>(n - b.lo_)];
    s.c_[static_cast<size_t>(n - lo)] = v;
  }
  s.normalize();
  return s;
}

QSeries QSeries::operator-() const {
  QSeries s = *this;
  for (auto& x : s.c_) x = -x;
  return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  long trunc = std::min(a.lo_ + b.trunc_, b.lo_ + a.trunc_);
  if (a.is_zero() || b.is_zero()) return QSeries::zero(trunc);
  long lo = a.lo_ + b.lo_;
  QSeries s;
  s.lo_ = lo;
  s.trunc_ = trunc;
  s.c_.assign(static_cast<size_t>(trunc - lo), Rat(0));
  size_t na = a.c_.size(), nb = b.c_.size();
  size_t limit = static_cast<size_t>(trunc - lo);
  for (size_t i = 0; i < na && i < limit; ++i) {
    if (a.c_[i] == 0) continue;
    size_t jmax = std::min(nb, limit - i);
    for (size_t j = 0; j < jmax; ++j) {
      if (b.c_[j] == 0) continue;
      s.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  s.normalize();
  return s;
}

QSeries QSeries::scaled(const Rat& c) const {
  if (c == 0) return zero(trunc_);
  QSeries s = *this;
  for (auto& x : s.c_) x *= c;
  return s;
}

QSeries QSeries::inverse() const {
  if (is_zero())
    fail(ErrorCode::DivisionByZero, "inverse of a zero series");
  const Rat& u = c_[0];
  size_t len = c_.size();
  QSeries s;
  s.lo_ = -lo_;
  s.trunc_ = s.lo_ + static_cast<long>(len);
  s.c_.assign(len, Rat(0));
  Rat uinv = 1 / u;
  for (size_t k = 0; k < len; ++k) {
    Rat acc = (k == 0) ? Rat(1) : Rat(0);
    for (size_t i = 1; i <= k; ++i)
      if (c_[i] != 0) acc -= c_[i] * s.c_[k - i];
    s.c_[k] = acc * uinv;
  }
  return s;
}

QSeries QSeries::pow(long e) const {
  if (e < 0) fail(ErrorCode::Usage, "pow expects a nonnegative exponent");
  if (e == 0) return one(trunc_ - lo_ > 0 ? trunc_ - lo_ : 1);
  QSeries acc = *this;
  for (long k = 1; k < e; ++k) acc = acc * (*this);
  return acc;
}

QSeries QSeries::truncated(long new_trunc) const {
  if (new_trunc > trunc_)
    fail(ErrorCode::TruncationMismatch, "cannot extend a truncation");
  QSeries s;
  s.lo_ = std::min(lo_, new_trunc);
  s.trunc_ = new_trunc;
  if (new_trunc > lo_ && !is_zero())
    s.c_.assign(c_.begin(), c_.begin() + (new_trunc - lo_));
  s.normalize();
  return s;
}

bool QSeries::all_integer() const {
  for (const auto& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

std::string QSeries::dump() const {
  std::ostringstream os;
  for (long n = lo_; n < trunc_; ++n)
    os << n << ": " << coeff(n).get_str() << "\n";
  return os.str();
}

namespace {

// prod_{n>=1} (1 - q^{step n}) via the pentagonal number theorem.
QSeries euler_product(long step, long T) {
  std::vector<Rat> c(static_cast<size_t>(std::max<long>(T, 1)), Rat(0));
  c[0] = 1;
  for (long k = 1;; ++k) {
    long e1 = step * (k * (3 * k - 1) / 2);
    long e2 = step * (k * (3 * k + 1) / 2);
    if (e1 >= T && e2 >= T) break;
    Rat sgn((k % 2) ? -1 : 1);
    if (e1 < T) c[static_cast<size_t>(e1)] += sgn;
    if (e2 < T) c[static_cast<size_t>(e2)] += sgn;
  }
  return QSeries::from_coeffs(0, std::move(c));
}

QSeries pow_by_squaring(const QSeries& base, long e, long T) {
  QSeries acc = QSeries::one(T);
  QSeries b = base;
  long k = e;
  while (k > 0) {
    if (k & 1) acc = (acc * b).truncated(std::min<long>(acc.trunc(), T));
    k >>= 1;
    if (k > 0) b = (b * b).truncated(std::min<long>(b.trunc(), T));
  }
  return acc;
}

QSeries sigma_series(int k, long T) {
  // sum_{n>=1} sigma_k(n) q^n by direct divisor enumeration
  std::vector<Rat> c(static_cast<size_t>(std::max<long>(T, 1)), Rat(0));
  for (long d = 1; d < T; ++d) {
    Int dk = pow_int(d, static_cast<unsigned long>(k));
    for (long n = d; n < T; n += d) c[static_cast<size_t>(n)] += Rat(dk);
  }
  c[0] = 0;
  return QSeries::from_coeffs(0, std::move(c));
}

}  // namespace

QSeries dedekind_style_product(long p, long e, long T, bool q_prefactor) {
  if (T < 1) fail(ErrorCode::Usage, "truncation must be >= 1");
  if (e == 0)
    return q_prefactor ? QSeries::monomial(Rat(1), 1, T) : QSeries::one(T);
  long ae = e < 0 ? -e : e;
  QSeries num = pow_by_squaring(euler_product(p, T), ae, T);
  QSeries den = pow_by_squaring(euler_product(1, T), ae, T);
  QSeries r = e > 0 ? num * den.inverse() : den * num.inverse();
  r = r.truncated(std::min(r.trunc(), T));
  if (q_prefactor) r = r * QSeries::monomial(Rat(1), 1, T);
  return r;
}

QSeries delta(long T) {
  QSeries e24 = pow_by_squaring(euler_product(1, T), 24, T);
  return e24 * QSeries::monomial(Rat(1), 1, T + 1);
}

QSeries eisenstein(int k, long T) {
  if (T < 1) fail(ErrorCode::Usage, "truncation must be >= 1");
  long factor;
  switch (k) {
    case 2: factor = -24; break;
    case 4: factor = 240; break;
    case 6: factor = -504; break;
    default:
      fail(ErrorCode::Usage, "eisenstein weight must be 2, 4 or 6");
  }
  QSeries s = sigma_series(k - 1, T).scaled(Rat(factor));
  return s + QSeries::one(T);
}

QSeries j_invariant(long T) {
  long P = T + 2;
  QSeries e4 = eisenstein(4, P);
  QSeries d = delta(P);
  return (e4 * e4 * e4) * d.inverse();
}

QSeries hauptmodul_fp(long p, long T) {
  require_supported_prime(p);
  long e = 24 / (p - 1);
  QSeries f = dedekind_style_product(p, e, T, true);
  if (!f.all_integer())
    fail(ErrorCode::InvariantViolation,
         "hauptmodul series has a non-integer coefficient");
  return f;
}

QSeries U_on_qexp(const QSeries& h, long p) {
  require_supported_prime(p);
  long lo = h.lowest_order();
  long n_lo = lo >= 0 ? (lo + p - 1) / p : lo / p;  // ceil(lo/p)
  long n_hi = (h.trunc() - 1) >= 0 ? (h.trunc() - 1) / p
                                   : -((-(h.trunc() - 1) + p - 1) / p);
  long trunc = n_hi + 1;
  std::vector<Rat> c;
  for (long n = n_lo; n <= n_hi; ++n) c.push_back(h.coeff(p * n));
  if (c.empty()) return QSeries::zero(trunc);
  QSeries s = QSeries::from_coeffs(n_lo, std::move(c));
  return s.truncated(std::min(s.trunc(), trunc));
}

QSeries V_on_qexp(const QSeries& h, long p) {
  require_supported_prime(p);
  long trunc = (h.trunc() - 1) * p + 1;
  if (h.is_zero()) return QSeries::zero(trunc);
  std::vector<Rat> c(static_cast<size_t>((h.trunc() - h.lowest_order() - 1) * p + 1),
                     Rat(0));
  for (long n = h.lowest_order(); n < h.trunc(); ++n)
    c[static_cast<size_t>((n - h.lowest_order()) * p)] = h.coeff(n);
  return QSeries::from_coeffs(h.lowest_order() * p, std::move(c));
}

IdentityReport verify_weight_identities(long T) {
  if (T < 1) fail(ErrorCode::Usage, "truncation must be >= 2");
  long P = T + 2;
  QSeries f2 = hauptmodul_fp(2, P);
  QSeries dlt = delta(P);
  QSeries e2 = eisenstein(2, P);
  QSeries e2p = V_on_qexp(e2, 2).scaled(Rat(2)).truncated(P) - e2;
  QSeries e6 = eisenstein(6, P);

  QSeries one64 = QSeries::one(P) + f2.scaled(Rat(64));
  QSeries one512 = QSeries::one(P) - f2.scaled(Rat(512));

  // E2'^6 * f2 = (1 + 2^6 f2)^3 * Delta
  QSeries lhs1 = e2p.pow(6) * f2;
  QSeries rhs1 = one64.pow(3) * dlt;
  // E6^2 * f2 = (1 + 2^6 f2)(1 - 2^9 f2)^2 * Delta
  QSeries lhs2 = (e6 * e6) * f2;
  QSeries rhs2 = one64 * one512 * one512 * dlt;

  IdentityReport rep;
  long hi = std::min(std::min(lhs1.trunc(), rhs1.trunc()),
                     std::min(lhs2.trunc(), rhs2.trunc()));
  hi = std::min(hi, T + 1);
  for (long n = 0; n < hi; ++n) {
    if (lhs1.coeff(n) != rhs1.coeff(n)) {
      rep.pass = false;
      rep.first_fail_order = n;
      rep.failing_identity = 1;
      return rep;
    }
    if (lhs2.coeff(n) != rhs2.coeff(n)) {
      rep.pass = false;
      rep.first_fail_order = n;
      rep.failing_identity = 2;
      return rep;
    }
  }
  rep.orders_checked = hi;
  return rep;
}

}  // namespace uop
