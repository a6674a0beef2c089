#ifndef UOP_SPECTRAL_HPP
#define UOP_SPECTRAL_HPP

#include <string>
#include <vector>

#include "uop/padic.hpp"
#include "uop/umatrix.hpp"

namespace uop {

// Coefficients of det(I - t U_n), exact.
struct CharSeries {
  std::vector<Rat> coeffs;  // c_0 .. c_n, c_0 = 1
  long n = 0;
  long p = 0;
};

struct LDUFactorization {
  std::vector<std::vector<Rat>> A;  // lower unitriangular
  std::vector<Rat> D;               // diagonal
  std::vector<std::vector<Rat>> B;  // upper unitriangular
  long n = 0;

  const Rat& a(long i, long j) const {
    return A[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  }
  const Rat& b(long i, long j) const {
    return B[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  }
  const Rat& d(long i) const { return D[static_cast<size_t>(i - 1)]; }
};

// One finite-slope eigendatum.
struct EigenPackage {
  long index = 0;
  PadicScalar eigenvalue;
  Rat slope;
  std::vector<PadicScalar> coords;  // f_p-power (r = 0) coordinates, coords[i-1] ~ f^i
  std::vector<PadicScalar> qexp;    // a_1 .. a_m with a_1 = 1
  PadicScalar self_pairing;
  long coord_min_relprec = 0;  // relative precision surviving the elimination

  EigenPackage()
      : eigenvalue(PadicScalar::exact_zero(2)),
        self_pairing(PadicScalar::exact_zero(2)) {}
};

CharSeries char_series(const UMatrix& U);

// First `count` Newton-polygon slopes of cs, increasing, with multiplicity.
std::vector<Rat> slopes(const CharSeries& cs, long count);

// Grows n until the first `count` slopes agree between n and n+5.
CharSeries stabilized_char_series(long p, long count, long* n_used = nullptr);

// Closed-form diagonal entries and slope formulas (p in {2, 3, 5}).
Rat conjecture_table_D(long p, long i);
Rat slope_formula(long p, long i);
// Closed form for the lower-triangular factor at p = 2, r = 1/2
// (2j >= i > j; zero for i > 2j).
Rat lemma_closed_form_a(long i, long j);

LDUFactorization ldu(const UMatrix& U);

struct ConjectureReport {
  bool diagonal_matches = true;      // D_ii equals the closed form
  bool factors_congruent_id = true;  // off-diagonal nu_p >= 1 in A and B
  bool lemma_matches = true;         // p = 2 closed-form A entries
  bool d_independent_of_r = true;
  std::vector<std::string> failures;
  bool pass() const {
    return diagonal_matches && factors_congruent_id && lemma_matches &&
           d_independent_of_r;
  }
};

// Checks the factorisation conjecture for p in {2, 3, 5} at the rational
// radius (1/2 for p = 2, 3 and 1/3 for p = 5): the D_ii closed forms for
// i <= d_count, the mod-p congruence of A and B, and for p = 2 the
// closed-form A entries up to lemma_limit.
ConjectureReport conjecture_check(long p, long n, long d_count = 12,
                                  long lemma_limit = 20);

// First `count` eigenpackages of U (r = 0), eigenvalue and q-coefficients
// certified to absolute precision >= abs_prec; qexp_terms coefficients.
std::vector<EigenPackage> eigen_solve(const UMatrix& U, long count,
                                      long abs_prec, long qexp_terms = 20);

// <h, k> = sum_i i h_i k_i p^{-12i/(p-1)} in f_p-power coordinates.
Rat pairing(const std::vector<Rat>& h, const std::vector<Rat>& k, long p);
PadicScalar pairing(const std::vector<PadicScalar>& h,
                    const std::vector<PadicScalar>& k, long p);

// Unitriangular solve of a cuspidal q-expansion against powers of f_p.
std::vector<Rat> express_in_f_basis(const QSeries& h, long p, long n);

// c_i = <h, phi_i> / <phi_i, phi_i>.
std::vector<PadicScalar> spectral_coefficients(
    const std::vector<Rat>& h_coords, const std::vector<EigenPackage>& eigens);

// Valuation of the sup-norm (in the radius-r orthonormal basis, with
// e = 12r/(p-1)) of h - sum_{i<=m} c_i phi_i, for m = 0..m_max.
std::vector<long> spectral_residual_valuations(
    const std::vector<Rat>& h_coords, const std::vector<EigenPackage>& eigens,
    long m_max, long radius_exponent);

// (U/lambda1)^steps applied to h.
std::vector<PadicScalar> iterate_projection(const std::vector<Rat>& h_coords,
                                            const UMatrix& U,
                                            const PadicScalar& lambda1,
                                            long steps, long relprec);

struct DiagonalizerResult {
  std::vector<std::vector<PadicScalar>> C;  // columns: normalized eigenvectors
  std::vector<PadicScalar> mu;              // eigenvalues
  bool congruent_to_identity = true;
  long min_offdiag_zero_bound = 0;  // abs-precision bound on C^-1 M C offdiag
};

// Constructive diagonalizer on the leading count x count block of U at the
// conjecture radius r; verifies C = Id mod p and that C^-1 M C is
// diagonal to working precision.
DiagonalizerResult diagonalizer(const UMatrix& U0, long count, long abs_prec,
                                const Rat& r);

}  // namespace uop

#endif
