#include <doctest.h>

#include "uop/hauptmodul.hpp"
#include "uop/umatrix.hpp"

using namespace uop;

TEST_CASE("modular polynomial at p = 2 and p = 3") {
  std::vector<Int> H2 = compute_Hp(2, 12);
  REQUIRE(H2.size() == 4);
  CHECK(H2[0] == 1);
  CHECK(H2[1] == 768);
  CHECK(H2[2] == 196608);
  CHECK(H2[3] == 16777216);
  // (1 + 256 x)^3 expanded: the known closed form.
  CHECK(H2[1] == 3 * 256);
  CHECK(H2[2] == 3 * 256 * 256);
  CHECK(H2[3] == Int(256) * 256 * 256);

  std::vector<Int> H3 = compute_Hp(3, 14);
  REQUIRE(H3.size() == 5);
  CHECK(H3[0] == 1);
  CHECK(H3[1] == 756);
  CHECK(H3[2] == 196830);
  CHECK(H3[3] == 19131876);
  CHECK(H3[4] == Int("387420489"));  // 3^18
}

TEST_CASE("modular polynomial certifies j f = H(f) beyond the solve range") {
  // compute_Hp solves a triangular system and then cross-checks extra
  // orders; ask for generous hints and make sure all primes succeed.
  for (long p : {5L, 7L, 13L}) {
    std::vector<Int> H = compute_Hp(p, 3 * (p + 2));
    CHECK(static_cast<long>(H.size()) == p + 2);
    CHECK(H[0] == 1);
  }
}

TEST_CASE("two-variable relation invariants") {
  for (long p : {2L, 3L, 5L, 7L, 13L}) {
    std::vector<Int> H = compute_Hp(p, 2 * (p + 2) + 4);
    BivarIntPoly I = derive_Ip(p, H);
    CHECK(I.coeff(0, 0) == 1);
    CHECK(I.coeff(1, 0) == 0);
    CHECK(I.coeff(0, 1) == 0);
    CHECK(I.total_degree() == p + 1);
    CHECK(I.max_degree_x() <= p);
    CHECK(I.max_degree_y() <= p);
  }
}

TEST_CASE("recurrence kernel matches the displayed matrices") {
  {
    RecurrenceKernel K = recurrence_kernel(derive_Ip(2, compute_Hp(2, 12)));
    CHECK(K.at(1, 1) == 48);
    CHECK(K.at(1, 2) == 1);
    CHECK(K.at(2, 1) == 4096);
    CHECK(K.at(2, 2) == 0);
  }
  {
    RecurrenceKernel K = recurrence_kernel(derive_Ip(3, compute_Hp(3, 14)));
    long expected[3][3] = {{270, 36, 1}, {26244, 729, 0}, {531441, 0, 0}};
    for (long a = 1; a <= 3; ++a)
      for (long b = 1; b <= 3; ++b) CHECK(K.at(a, b) == expected[a - 1][b - 1]);
  }
}

TEST_CASE("kernel is skew upper triangular for larger primes") {
  for (long p : {7L, 13L}) {
    RecurrenceKernel K =
        recurrence_kernel(derive_Ip(p, compute_Hp(p, 2 * (p + 2) + 4)));
    for (long a = 1; a <= p; ++a)
      for (long b = 1; b <= p; ++b)
        if (a + b > p + 1) CHECK(K.at(a, b) == 0);
  }
}

TEST_CASE("recurrence reproduces the direct matrix") {
  for (long p : {2L, 3L}) {
    long n = 14;
    UMatrix U = u_direct(p, n);
    RecurrenceKernel K =
        recurrence_kernel(derive_Ip(p, compute_Hp(p, 2 * (p + 2) + 4)));
    UMatrix R = u_recurrence(p, n, K, U);
    CHECK(R == U);
  }
}

TEST_CASE("rational generation holds with the negative sign") {
  for (long p : {2L, 5L}) {
    BivarIntPoly I = derive_Ip(p, compute_Hp(p, 2 * (p + 2) + 4));
    UMatrix U = u_direct(p, 16);
    RatGenReport rep = rational_generation_check(I, U, 16);
    CHECK(rep.pass);
    CHECK(rep.sign == -1);
    CHECK(rep.checked_through >= 16);
  }
}
