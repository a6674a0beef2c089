#include <doctest.h>

#include <vector>

#include "uop/qseries.hpp"

using namespace uop;

namespace {

// Brute-force truncated product prod_{n>=1} (1 - q^{step n})^e for e >= 0,
// via naive polynomial multiplication.  Oracle for the pentagonal-number
// fast path.
QSeries naive_eta_power(long step, long e, long T) {
  std::vector<Rat> acc(static_cast<size_t>(T), Rat(0));
  acc[0] = 1;
  for (long n = step; n < T; n += step)
    for (long rep = 0; rep < e; ++rep) {
      std::vector<Rat> next(acc);
      for (long k = 0; k + n < T; ++k)
        if (acc[static_cast<size_t>(k)] != 0)
          next[static_cast<size_t>(k + n)] -= acc[static_cast<size_t>(k)];
      acc = std::move(next);
    }
  return QSeries::from_coeffs(0, std::move(acc));
}

long sigma(long k, long n) {
  long s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      long t = 1;
      for (long i = 0; i < k; ++i) t *= d;
      s += t;
    }
  return s;
}

}  // namespace

TEST_CASE("series ring basics") {
  QSeries a = QSeries::from_coeffs(0, {Rat(1), Rat(2), Rat(3)});
  QSeries b = QSeries::from_coeffs(1, {Rat(5), Rat(-1)});
  QSeries s = a + b;
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(1) == 7);
  CHECK(s.coeff(2) == 2);
  QSeries prod = a * b;
  CHECK(prod.lowest_order() == 1);
  CHECK(prod.coeff(1) == 5);
  CHECK(prod.coeff(2) == 9);  // 2*5 - 1
  // truncation of a product: min(lo_a + T_b, lo_b + T_a)
  CHECK(prod.trunc() == std::min(0 + b.trunc(), 1 + a.trunc()));
  QSeries inv = a.inverse();
  QSeries one = a * inv;
  for (long k = 0; k < one.trunc(); ++k)
    CHECK(one.coeff(k) == (k == 0 ? 1 : 0));
}

TEST_CASE("eta-style products match the naive expansion") {
  long T = 22;
  for (long p : {2L, 3L, 5L}) {
    long e = 24 / (p - 1);
    // f_p * prod(1-q^n)^e = q * prod(1-q^{pn})^e, both sides by the
    // naive oracle on the right, fast path on the left.
    QSeries lhs = dedekind_style_product(p, e, T, true) * naive_eta_power(1, e, T);
    QSeries rhs = QSeries::monomial(Rat(1), 1, T + 1) * naive_eta_power(p, e, T);
    long common = std::min(lhs.trunc(), rhs.trunc());
    for (long k = 0; k < common; ++k) CHECK(lhs.coeff(k) == rhs.coeff(k));
  }
}

TEST_CASE("delta has the familiar initial coefficients") {
  QSeries d = delta(19);
  long tau[] = {0, 1, -24, 252, -1472, 4830, -6048, -16744};
  for (long n = 1; n < 8; ++n) CHECK(d.coeff(n) == tau[n]);
  // and agrees with q * (naive eta oracle)^24 further out
  QSeries oracle = QSeries::monomial(Rat(1), 1, 19) * naive_eta_power(1, 24, 18);
  for (long n = 0; n < oracle.trunc(); ++n) CHECK(d.coeff(n) == oracle.coeff(n));
}

TEST_CASE("eisenstein series from divisor sums") {
  QSeries e2 = eisenstein(2, 12), e4 = eisenstein(4, 12), e6 = eisenstein(6, 12);
  for (long n = 1; n < 12; ++n) {
    CHECK(e2.coeff(n) == -24 * sigma(1, n));
    CHECK(e4.coeff(n) == 240 * sigma(3, n));
    CHECK(e6.coeff(n) == -504 * sigma(5, n));
  }
}

TEST_CASE("j-invariant expansion") {
  QSeries j = j_invariant(3);
  CHECK(j.lowest_order() == -1);
  CHECK(j.coeff(-1) == 1);
  CHECK(j.coeff(0) == 744);
  CHECK(j.coeff(1) == 196884);
  CHECK(j.coeff(2) == 21493760);
}

TEST_CASE("U and V operators") {
  QSeries f = hauptmodul_fp(2, 40);
  QSeries uv = U_on_qexp(V_on_qexp(f, 3), 3);  // U after V is the identity
  for (long k = 0; k < uv.trunc(); ++k) CHECK(uv.coeff(k) == f.coeff(k));

  // U(a V(b)) = b U(a): the projection property that justifies computing
  // U columnwise on f-powers.
  long p = 3, T = 30;
  QSeries a = delta(T);
  QSeries b = QSeries::from_coeffs(0, {Rat(2), Rat(-5), Rat(1), Rat(7)});
  QSeries lhs = U_on_qexp(a * V_on_qexp(b, p), p);
  QSeries rhs = b * U_on_qexp(a, p);
  long common = std::min(lhs.trunc(), rhs.trunc());
  for (long k = 0; k < common; ++k) CHECK(lhs.coeff(k) == rhs.coeff(k));
}

TEST_CASE("hauptmodul is integral and satisfies its modular relation") {
  for (long p : {2L, 3L, 5L, 7L, 13L}) {
    QSeries f = hauptmodul_fp(p, 25);
    CHECK(f.lowest_order() == 1);
    CHECK(f.coeff(1) == 1);
    CHECK(f.all_integer());
  }
  // j * f = H(f) as q-series: checked via 1/f * H(f) = j * 1 trick at p=2
  // with the known H coefficients 1, 768, 196608, 16777216.
  long T = 20;
  QSeries f = hauptmodul_fp(2, T);
  QSeries H = QSeries::one(T) + f.scaled(Rat(768)) +
              (f * f).scaled(Rat(196608)) +
              (f * f * f).scaled(Rat(16777216));
  QSeries lhs = j_invariant(T) * f;
  for (long k = 0; k < std::min(lhs.trunc(), H.trunc()); ++k)
    CHECK(lhs.coeff(k) == H.coeff(k));
}

TEST_CASE("level-2 weight identities hold to high order") {
  IdentityReport rep = verify_weight_identities(120);
  CHECK(rep.pass);
  CHECK(rep.orders_checked >= 120);
}
