#include "uop/hauptmodul.hpp"

#include <algorithm>
#include <sstream>

#include "uop/umatrix.hpp"

namespace uop {

Int BivarIntPoly::coeff(long a, long b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Int(0) : it->second;
}

void BivarIntPoly::set(long a, long b, const Int& c) {
  if (c == 0)
    terms_.erase({a, b});
  else
    terms_[{a, b}] = c;
}

long BivarIntPoly::total_degree() const {
  long d = 0;
  for (const auto& [k, v] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

long BivarIntPoly::max_degree_x() const {
  long d = 0;
  for (const auto& [k, v] : terms_) d = std::max(d, k.first);
  return d;
}

long BivarIntPoly::max_degree_y() const {
  long d = 0;
  for (const auto& [k, v] : terms_) d = std::max(d, k.second);
  return d;
}

std::string BivarIntPoly::dump() const {
  std::ostringstream os;
  for (const auto& [k, v] : terms_)
    os << "(" << k.first << "," << k.second << "): " << v.get_str() << "\n";
  return os.str();
}

std::vector<Int> compute_Hp(long p, long T_hint) {
  require_supported_prime(p);
  long T = std::max(T_hint, p + 3);
  long Q = T + 4;
  QSeries j = j_invariant(Q);
  QSeries f = hauptmodul_fp(p, Q + 2);
  QSeries lhs = j * f;  // starts at q^0 with constant term 1

  std::vector<QSeries> fpow(static_cast<size_t>(p + 2));
  fpow[0] = QSeries::one(lhs.trunc());
  for (long k = 1; k <= p + 1; ++k) fpow[static_cast<size_t>(k)] = fpow[static_cast<size_t>(k - 1)] * f;

  std::vector<Int> h(static_cast<size_t>(p + 2));
  QSeries residual = lhs;
  for (long k = 0; k <= p + 1; ++k) {
    Rat hk = residual.coeff(k);
    if (hk.get_den() != 1)
      fail(ErrorCode::InconsistentExpansion,
           "non-integer coefficient while matching j*f against powers of f");
    h[static_cast<size_t>(k)] = hk.get_num();
    residual = residual - fpow[static_cast<size_t>(k)].scaled(hk);
  }
  // Overdetermined check at orders beyond p+2.
  for (long m = 0; m < residual.trunc(); ++m)
    if (residual.coeff(m) != 0)
      fail(ErrorCode::InconsistentExpansion,
           "j*f - H(f) does not vanish at order " + std::to_string(m));
  return h;
}

namespace {

// Polynomials in x with rational-polynomial-in-y coefficients, dense.
using YPoly = std::vector<Rat>;

Rat& at(YPoly& v, size_t k) {
  if (v.size() <= k) v.resize(k + 1, Rat(0));
  return v[k];
}

}  // namespace

BivarIntPoly derive_Ip(long p, const std::vector<Int>& Hp) {
  require_supported_prime(p);
  if (Hp.size() != static_cast<size_t>(p + 2))
    fail(ErrorCode::Usage, "H_p must have degree p+1");
  long c = 12 / (p - 1);
  Rat s = pow_rat(p, -c);  // p^{-12/(p-1)}

  // F(x,y) = x * H(s*y) - s*y * H(x); F vanishes on x = s*y.
  long dx = p + 1;
  std::vector<YPoly> F(static_cast<size_t>(dx + 1));
  for (long k = 0; k <= p + 1; ++k) {
    Rat hk(Hp[static_cast<size_t>(k)]);
    // x * h_k s^k y^k
    at(F[1], static_cast<size_t>(k)) += hk * pow_rat(p, -c * k);
    // - s y * h_k x^k
    at(F[static_cast<size_t>(k)], 1) -= hk * s;
  }

  // Synthetic division by (x - s*y).
  std::vector<YPoly> Qd(static_cast<size_t>(dx));
  YPoly carry;  // s*y * (previous quotient coefficient)
  for (long a = dx; a >= 1; --a) {
    YPoly qa = F[static_cast<size_t>(a)];
    if (a < dx) {
      const YPoly& prev = Qd[static_cast<size_t>(a)];
      for (size_t k = 0; k < prev.size(); ++k)
        if (prev[k] != 0) at(qa, k + 1) += s * prev[k];
    }
    Qd[static_cast<size_t>(a - 1)] = qa;
  }
  // Remainder = F_0 + s*y*Q_0 must vanish.
  YPoly rem = F[0];
  for (size_t k = 0; k < Qd[0].size(); ++k)
    if (Qd[0][k] != 0) at(rem, k + 1) += s * Qd[0][k];
  for (const Rat& rcoef : rem)
    if (rcoef != 0)
      fail(ErrorCode::NonExactDivision,
           "(x - p^{-c} y) does not divide the cleared relation");

  // Normalize so the constant coefficient is +1 and everything is integral.
  if (Qd[0].empty() || Qd[0][0] == 0)
    fail(ErrorCode::InvariantViolation, "relation has zero constant term");
  Rat scale = 1 / Qd[0][0];
  BivarIntPoly I;
  for (long a = 0; a < dx; ++a)
    for (size_t b = 0; b < Qd[static_cast<size_t>(a)].size(); ++b) {
      Rat v = Qd[static_cast<size_t>(a)][b] * scale;
      if (v == 0) continue;
      if (v.get_den() != 1)
        fail(ErrorCode::InvariantViolation,
             "non-integer coefficient in the two-variable relation");
      I.set(a, static_cast<long>(b), v.get_num());
    }

  // Structural invariants.
  if (I.coeff(0, 0) != 1 || I.coeff(1, 0) != 0 || I.coeff(0, 1) != 0 ||
      I.total_degree() != p + 1 || I.max_degree_x() > p || I.max_degree_y() > p)
    fail(ErrorCode::InvariantViolation,
         "two-variable relation violates its degree/constant invariants");
  return I;
}

RecurrenceKernel recurrence_kernel(const BivarIntPoly& Ip) {
  long p = Ip.max_degree_x();
  RecurrenceKernel K;
  K.p = p;
  K.M.assign(static_cast<size_t>(p),
             std::vector<Int>(static_cast<size_t>(p), Int(0)));
  for (long a = 1; a <= p; ++a)
    for (long b = 1; b <= p; ++b)
      K.M[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)] =
          -Ip.coeff(a, b);
  for (long a = 1; a <= p; ++a)
    for (long b = 1; b <= p; ++b)
      if (a + b > p + 1 && K.at(a, b) != 0)
        fail(ErrorCode::InvariantViolation,
             "recurrence kernel is not skew upper triangular");
  return K;
}

namespace {

using Grid = std::vector<std::vector<Rat>>;  // [x-deg][y-deg], rectangular

Grid grid(long n) {
  return Grid(static_cast<size_t>(n + 1),
              std::vector<Rat>(static_cast<size_t>(n + 1), Rat(0)));
}

Grid mul_grid(const Grid& a, const Grid& b, long n) {
  Grid r = grid(n);
  for (long i = 0; i <= n; ++i)
    for (long j = 0; j <= n; ++j) {
      const Rat& av = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (av == 0) continue;
      for (long k = 0; i + k <= n; ++k)
        for (long l = 0; j + l <= n; ++l) {
          const Rat& bv = b[static_cast<size_t>(k)][static_cast<size_t>(l)];
          if (bv == 0) continue;
          r[static_cast<size_t>(i + k)][static_cast<size_t>(j + l)] += av * bv;
        }
    }
  return r;
}

}  // namespace

RatGenReport rational_generation_check(const BivarIntPoly& Ip,
                                       const UMatrix& U0, long n) {
  if (U0.size() < n)
    fail(ErrorCode::Usage, "U matrix smaller than requested check range");
  long p = U0.prime();

  Grid I = grid(n);
  for (const auto& [k, v] : Ip.terms())
    if (k.first <= n && k.second <= n)
      I[static_cast<size_t>(k.first)][static_cast<size_t>(k.second)] = Rat(v);

  // inverse of I (constant term 1): sum_k (1 - I)^k; every term of 1 - I
  // has x-degree >= 1, so k <= n suffices.
  Grid one = grid(n);
  one[0][0] = 1;
  Grid t = grid(n);
  for (long i = 0; i <= n; ++i)
    for (long j = 0; j <= n; ++j)
      t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          (i == 0 && j == 0 ? Rat(1) : Rat(0)) -
          I[static_cast<size_t>(i)][static_cast<size_t>(j)];
  Grid inv = one, power = one;
  for (long k = 1; k <= n; ++k) {
    power = mul_grid(power, t, n);
    for (long i = 0; i <= n; ++i)
      for (long j = 0; j <= n; ++j)
        inv[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            power[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }

  // (y/p) * dI/dy * I^{-1}
  Grid ydIdy = grid(n);
  for (const auto& [k, v] : Ip.terms()) {
    if (k.second == 0) continue;
    if (k.first <= n && k.second <= n)
      ydIdy[static_cast<size_t>(k.first)][static_cast<size_t>(k.second)] =
          Rat(v) * Rat(k.second);
  }
  Grid R = mul_grid(ydIdy, inv, n);
  for (auto& row : R)
    for (auto& x : row) x /= Rat(p);

  RatGenReport rep;
  for (int s : {+1, -1}) {
    bool ok = true;
    for (long i = 1; i <= n && ok; ++i)
      for (long j = 1; j <= n && ok; ++j) {
        Rat expect = Rat(s) * R[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (expect != U0.entry(i, j)) ok = false;
      }
    if (ok) {
      rep.sign = s;
      rep.pass = true;
      rep.checked_through = n;
      return rep;
    }
  }
  fail(ErrorCode::NoSignMatches,
       "neither sign of the generating function matches the U matrix");
}

}  // namespace uop
