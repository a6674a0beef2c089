#include "uop/spectral.hpp"

#include <algorithm>

#include "uop/qseries.hpp"

namespace uop {

namespace {

using RatMat = std::vector<std::vector<Rat>>;

RatMat rat_matrix(long n) {
  return RatMat(static_cast<size_t>(n),
                std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
}

}  // namespace

CharSeries char_series(const UMatrix& U) {
  long n = U.size();
  CharSeries cs;
  cs.n = n;
  cs.p = U.prime();
  cs.coeffs.assign(static_cast<size_t>(n + 1), Rat(0));
  cs.coeffs[0] = 1;

  // Faddeev-LeVerrier: M_1 = I, c_k = -tr(U M_k)/k, M_{k+1} = U M_k + c_k I.
  RatMat M = rat_matrix(n);
  for (long i = 0; i < n; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  for (long k = 1; k <= n; ++k) {
    RatMat P = rat_matrix(n);
    for (long i = 1; i <= n; ++i)
      for (long l = 1; l <= n; ++l) {
        const Rat& u = U.entry(i, l);
        if (u == 0) continue;
        for (long j = 1; j <= n; ++j) {
          const Rat& m = M[static_cast<size_t>(l - 1)][static_cast<size_t>(j - 1)];
          if (m != 0)
            P[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] += u * m;
        }
      }
    Rat tr(0);
    for (long i = 0; i < n; ++i) tr += P[static_cast<size_t>(i)][static_cast<size_t>(i)];
    Rat ck = -tr / Rat(k);
    cs.coeffs[static_cast<size_t>(k)] = ck;
    for (long i = 0; i < n; ++i) P[static_cast<size_t>(i)][static_cast<size_t>(i)] += ck;
    M = std::move(P);
  }
  return cs;
}

std::vector<Rat> slopes(const CharSeries& cs, long count) {
  std::vector<NewtonPoint> pts;
  for (size_t d = 0; d < cs.coeffs.size(); ++d) {
    NewtonPoint pt;
    pt.degree = static_cast<long>(d);
    long v = valuation_rat(cs.coeffs[d], cs.p);
    if (v == kValInf)
      pt.infinite = true;
    else
      pt.valuation = Rat(v);
    pts.push_back(pt);
  }
  NewtonPolygon np = newton_polygon(pts);
  std::vector<Rat> all = np.slope_list();
  if (static_cast<long>(all.size()) < count)
    fail(ErrorCode::UnstableRange,
         "only " + std::to_string(all.size()) +
             " finite slopes available at this truncation");
  all.resize(static_cast<size_t>(count));
  return all;
}

CharSeries stabilized_char_series(long p, long count, long* n_used) {
  for (long n = std::max<long>(count + 3, 8); n <= 80; n += 5) {
    CharSeries a = char_series(u_direct(p, n));
    CharSeries b = char_series(u_direct(p, n + 5));
    bool ok = true;
    try {
      std::vector<Rat> sa = slopes(a, count);
      std::vector<Rat> sb = slopes(b, count);
      ok = (sa == sb);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnstableRange) throw;
      ok = false;
    }
    if (ok) {
      if (n_used) *n_used = n + 5;
      return b;
    }
  }
  fail(ErrorCode::UnstableRange,
       "slopes did not stabilize within the size budget");
}

Rat conjecture_table_D(long p, long i) {
  unsigned long ui = static_cast<unsigned long>(i);
  switch (p) {
    case 2: {
      Rat num(pow_int(2, 4 * ui + 1) * factorial(3 * ui) * factorial(3 * ui) *
              factorial(ui) * factorial(ui));
      Rat den(Int(3) * pow_int(factorial(2 * ui), 4));
      Rat r = num / den;
      r.canonicalize();
      return r;
    }
    case 3: {
      Rat num(pow_int(3, 3 * ui) * factorial(6 * ui) * factorial(2 * ui) *
              factorial(ui));
      Rat den(Int(2) * pow_int(factorial(3 * ui), 3));
      Rat r = num / den;
      r.canonicalize();
      return r;
    }
    case 5: {
      Rat num(pow_int(5, 2 * ui) * factorial(10 * ui) * factorial(3 * ui) *
              factorial(3 * ui) * factorial(ui));
      Rat den(Int(3) * pow_int(factorial(5 * ui), 3) * factorial(2 * ui));
      Rat r = num / den;
      r.canonicalize();
      return r;
    }
    default:
      fail(ErrorCode::Usage, "closed-form D known only for p in {2, 3, 5}");
  }
}

Rat slope_formula(long p, long i) {
  unsigned long ui = static_cast<unsigned long>(i);
  switch (p) {
    case 2:
      return Rat(1 + 2 * (factorial_valuation(3 * ui, 2) -
                          factorial_valuation(ui, 2)));
    case 3:
      return Rat(2 * i + 2 * (factorial_valuation(2 * ui, 3) -
                              factorial_valuation(ui, 3)));
    case 5:
      return Rat(i + 2 * (factorial_valuation(3 * ui, 5) -
                          factorial_valuation(ui, 5)));
    default:
      fail(ErrorCode::Usage, "slope formula known only for p in {2, 3, 5}");
  }
}

Rat lemma_closed_form_a(long i, long j) {
  if (!(2 * j >= i && i > j && j >= 1))
    fail(ErrorCode::Usage, "closed form defined for 2j >= i > j >= 1");
  unsigned long ui = static_cast<unsigned long>(i);
  unsigned long uj = static_cast<unsigned long>(j);
  Rat t1(factorial(2 * uj), pow_int(2, uj) * factorial(uj));
  Rat t2(pow_int(2, ui) * factorial(ui), factorial(2 * ui));
  Rat t3(factorial(2 * ui - 1), factorial(ui + uj));
  Rat t4(factorial(2 * uj + ui - 1), factorial(3 * uj));
  Rat r = Rat(6 * i * j) * t1 * t1 * t2 * t2 * t3 * t4 *
          Rat(binomial(uj, ui - uj));
  r.canonicalize();
  return r;
}

LDUFactorization ldu(const UMatrix& U) {
  long n = U.size();
  LDUFactorization f;
  f.n = n;
  f.A = rat_matrix(n);
  f.B = rat_matrix(n);
  f.D.assign(static_cast<size_t>(n), Rat(0));
  for (long i = 0; i < n; ++i) {
    f.A[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    f.B[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  }
  RatMat W = rat_matrix(n);
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j)
      W[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = U.entry(i, j);

  for (long k = 0; k < n; ++k) {
    const Rat piv = W[static_cast<size_t>(k)][static_cast<size_t>(k)];
    if (piv == 0)
      fail(ErrorCode::SingularMinor,
           "leading principal minor singular at size " + std::to_string(k + 1));
    f.D[static_cast<size_t>(k)] = piv;
    for (long i = k + 1; i < n; ++i)
      f.A[static_cast<size_t>(i)][static_cast<size_t>(k)] =
          W[static_cast<size_t>(i)][static_cast<size_t>(k)] / piv;
    for (long j = k + 1; j < n; ++j)
      f.B[static_cast<size_t>(k)][static_cast<size_t>(j)] =
          W[static_cast<size_t>(k)][static_cast<size_t>(j)] / piv;
    for (long i = k + 1; i < n; ++i) {
      const Rat& aik = f.A[static_cast<size_t>(i)][static_cast<size_t>(k)];
      if (aik == 0) continue;
      for (long j = k + 1; j < n; ++j) {
        const Rat& wkj = W[static_cast<size_t>(k)][static_cast<size_t>(j)];
        if (wkj != 0)
          W[static_cast<size_t>(i)][static_cast<size_t>(j)] -= aik * wkj;
      }
    }
  }
  return f;
}

ConjectureReport conjecture_check(long p, long n, long d_count,
                                  long lemma_limit) {
  if (p != 2 && p != 3 && p != 5)
    fail(ErrorCode::Usage, "conjecture check applies to p in {2, 3, 5}");
  UMatrix U0 = u_direct(p, n);
  LDUFactorization f0 = ldu(U0);

  ConjectureReport rep;
  long dmax = std::min(d_count, n);
  for (long i = 1; i <= dmax; ++i) {
    if (f0.d(i) != conjecture_table_D(p, i)) {
      rep.diagonal_matches = false;
      rep.failures.push_back("D_" + std::to_string(i) +
                             " differs from the closed form");
    }
  }
  // Congruence to Id is claimed at r = 1/2.  Rescaling multiplies an
  // off-diagonal factor entry by p^{e(j-i)} with e = 6/(p-1), which for
  // p = 5 is half-integral, so compare valuations directly rather than
  // building the rescaled matrix.
  Rat e_half(6, p - 1);
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) {
      if (i == j) continue;
      const Rat& a = (i > j) ? f0.a(i, j) : f0.b(i, j);
      if (a == 0) continue;
      Rat v = Rat(valuation_rat(a, p)) + e_half * Rat(j - i);
      if (v < 1) {
        rep.factors_congruent_id = false;
        rep.failures.push_back(std::string(i > j ? "A_" : "B_") +
                               std::to_string(i) + "," + std::to_string(j) +
                               " has valuation < 1 at r = 1/2");
      }
    }
  if (p == 2) {
    // At p = 2 the r = 1/2 rescale has integer exponent 6, so the
    // closed-form entries can be compared exactly.
    long lim = std::min(lemma_limit, n);
    for (long i = 2; i <= lim; ++i)
      for (long j = 1; j < i; ++j) {
        Rat got = f0.a(i, j) * pow_rat(2, 6 * (j - i));
        Rat expect = (2 * j >= i) ? lemma_closed_form_a(i, j) : Rat(0);
        if (got != expect) {
          rep.lemma_matches = false;
          rep.failures.push_back("A_" + std::to_string(i) + "," +
                                 std::to_string(j) +
                                 " differs from the closed form");
        }
      }
  }
  // D is invariant under rescaling (a diagonal conjugation); confirm at
  // an integer-exponent radius.
  Rat r_alt = (p == 5) ? Rat(1, 3) : Rat(1, 2);
  LDUFactorization fr = ldu(rescale(U0, r_alt));
  for (long i = 1; i <= n; ++i)
    if (f0.d(i) != fr.d(i)) {
      rep.d_independent_of_r = false;
      rep.failures.push_back("D_" + std::to_string(i) + " depends on r");
    }
  return rep;
}

namespace {

using PVec = std::vector<PadicScalar>;
using PMat = std::vector<PVec>;

PMat padic_matrix(const UMatrix& U, long relprec) {
  long n = U.size();
  PMat A(static_cast<size_t>(n));
  for (long i = 1; i <= n; ++i) {
    A[static_cast<size_t>(i - 1)].reserve(static_cast<size_t>(n));
    for (long j = 1; j <= n; ++j)
      A[static_cast<size_t>(i - 1)].push_back(
          PadicScalar::from_rational(U.entry(i, j), U.prime(), relprec));
  }
  return A;
}

// Kernel vector of a capped matrix of corank 1, by Gauss-Jordan
// elimination with min-valuation pivoting.  Tracks the relative precision
// surviving the pivot divisions.
PVec kernel_vector(PMat A, long p, long relprec, long* min_rel_out) {
  size_t m = A.size();
  std::vector<bool> row_active(m, true), col_active(m, true);
  std::vector<std::pair<size_t, size_t>> pivots;

  for (size_t step = 0; step + 1 < m; ++step) {
    long best_val = kValInf;
    size_t pr = m, pc = m;
    for (size_t i = 0; i < m; ++i) {
      if (!row_active[i]) continue;
      for (size_t j = 0; j < m; ++j) {
        if (!col_active[j]) continue;
        const PadicScalar& x = A[i][j];
        if (x.is_zero()) continue;
        if (x.valuation() < best_val) {
          best_val = x.valuation();
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == m) break;  // everything left is zero at this precision
    const PadicScalar& piv = A[pr][pc];
    for (size_t i = 0; i < m; ++i) {
      if (i == pr) continue;  // clear the pivot column in every other row
      if (A[i][pc].is_zero()) continue;
      PadicScalar factor = A[i][pc] / piv;
      for (size_t j = 0; j < m; ++j) {
        if (!col_active[j] && j != pc) continue;
        A[i][j] = A[i][j] - factor * A[pr][j];
      }
      A[i][pc] = PadicScalar::inexact_zero(p, A[i][pc].abs_prec());
    }
    row_active[pr] = false;
    col_active[pc] = false;
    pivots.emplace_back(pr, pc);
  }

  std::vector<size_t> free_cols;
  for (size_t j = 0; j < m; ++j)
    if (col_active[j]) free_cols.push_back(j);
  if (free_cols.size() != 1)
    fail(ErrorCode::PrecisionLoss,
         "kernel dimension " + std::to_string(free_cols.size()) +
             " at working precision (expected 1)");
  size_t c0 = free_cols[0];
  for (size_t i = 0; i < m; ++i)
    if (row_active[i] && !A[i][c0].is_zero())
      fail(ErrorCode::PrecisionLoss,
           "no kernel at working precision: residual row is nonzero");

  PVec x(m, PadicScalar::exact_zero(p));
  x[c0] = PadicScalar::from_rational(Rat(1), p, relprec);
  long min_rel = relprec;
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    auto [pr, pc] = *it;
    PadicScalar v = -(A[pr][c0] / A[pr][pc]);
    if (!v.is_zero()) min_rel = std::min(min_rel, v.relprec());
    x[pc] = v;
  }
  if (min_rel_out) *min_rel_out = min_rel;
  return x;
}

PVec mat_vec(const PMat& A, const PVec& v, long p) {
  size_t m = A.size();
  PVec r(m, PadicScalar::exact_zero(p));
  for (size_t i = 0; i < m; ++i) {
    PadicScalar acc = PadicScalar::exact_zero(p);
    for (size_t j = 0; j < m; ++j) {
      if (A[i][j].is_exact_zero() || v[j].is_exact_zero()) continue;
      acc = acc + A[i][j] * v[j];
    }
    r[i] = acc;
  }
  return r;
}

// Weight p^{-12i/(p-1)} of the f-power pairing at index i (1-based).
Rat pairing_weight(long p, long i) {
  return Rat(i) * pow_rat(p, -(12 / (p - 1)) * i);
}

}  // namespace

std::vector<EigenPackage> eigen_solve(const UMatrix& U, long count,
                                      long abs_prec, long qexp_terms) {
  if (U.radius() != 0)
    fail(ErrorCode::Usage, "eigen solve expects the r = 0 matrix");
  long p = U.prime();
  long n = U.size();
  if (count > n) fail(ErrorCode::Usage, "count exceeds matrix size");

  CharSeries cs = char_series(U);

  // The first `count` Newton segments must be simple with integer slope.
  std::vector<NewtonPoint> pts;
  for (size_t d = 0; d < cs.coeffs.size(); ++d) {
    NewtonPoint pt;
    pt.degree = static_cast<long>(d);
    long v = valuation_rat(cs.coeffs[d], p);
    if (v == kValInf)
      pt.infinite = true;
    else
      pt.valuation = Rat(v);
    pts.push_back(pt);
  }
  NewtonPolygon np = newton_polygon(pts);
  std::vector<Rat> slope_seq;
  for (const auto& seg : np.segments) {
    for (long t = 0; t < seg.length && static_cast<long>(slope_seq.size()) < count; ++t) {
      if (seg.length != 1 || seg.slope.get_den() != 1)
        fail(ErrorCode::NonIsolatedRoot,
             "slope " + seg.slope.get_str() + " has multiplicity " +
                 std::to_string(seg.length) +
                 "; eigenvalue may live in an extension");
      slope_seq.push_back(seg.slope);
    }
    if (static_cast<long>(slope_seq.size()) >= count) break;
  }
  if (static_cast<long>(slope_seq.size()) < count)
    fail(ErrorCode::UnstableRange, "fewer finite slopes than requested");

  long s_max = mpz_get_si(slope_seq.back().get_num().get_mpz_t());
  long relprec = abs_prec + s_max + 16;
  long target_abs = s_max + relprec;

  // Eigenvalues are the roots of the reversed characteristic series.
  std::vector<Rat> rev(cs.coeffs.rbegin(), cs.coeffs.rend());
  PadicRootReport roots = padic_roots(rev, p, target_abs);
  std::vector<PadicScalar> lambdas;
  for (const auto& rt : roots.roots)
    if (!rt.is_exact_zero()) lambdas.push_back(rt);
  std::sort(lambdas.begin(), lambdas.end(),
            [](const PadicScalar& a, const PadicScalar& b) {
              return a.valuation() < b.valuation();
            });
  if (static_cast<long>(lambdas.size()) < count)
    fail(ErrorCode::NonIsolatedRoot, "fewer isolated roots than slopes");

  // q-expansion scaffolding shared by all eigenfunctions.
  QSeries f = hauptmodul_fp(p, qexp_terms + 1);
  std::vector<QSeries> fpow(static_cast<size_t>(std::min(n, qexp_terms) + 1));
  if (!fpow.empty() && fpow.size() > 1) fpow[1] = f;
  for (size_t i = 2; i < fpow.size(); ++i) fpow[i] = fpow[i - 1] * f;

  PMat base = padic_matrix(U, relprec);
  std::vector<EigenPackage> out;
  for (long k = 0; k < count; ++k) {
    const PadicScalar& lambda = lambdas[static_cast<size_t>(k)];
    if (Rat(lambda.valuation()) != slope_seq[static_cast<size_t>(k)])
      fail(ErrorCode::InvariantViolation,
           "eigenvalue valuation does not match the Newton slope");

    PMat A = base;
    for (size_t i = 0; i < A.size(); ++i) A[i][i] = A[i][i] - lambda;
    long min_rel = relprec;
    PVec x = kernel_vector(std::move(A), p, relprec, &min_rel);

    if (x[0].is_zero())
      fail(ErrorCode::PrecisionLoss,
           "leading coordinate vanishes; cannot normalize to q + O(q^2)");
    PadicScalar inv_lead = x[0];
    for (auto& xi : x) xi = xi / inv_lead;

    EigenPackage pkg;
    pkg.index = k + 1;
    pkg.eigenvalue = lambda;
    pkg.slope = slope_seq[static_cast<size_t>(k)];
    pkg.coords = x;
    pkg.coord_min_relprec = min_rel;

    for (long m = 1; m <= qexp_terms; ++m) {
      PadicScalar am = PadicScalar::exact_zero(p);
      for (size_t i = 1; i < fpow.size(); ++i) {
        if (static_cast<long>(i) > m) break;  // f^i = O(q^i)
        Rat c = fpow[i].coeff(m);
        if (c == 0 || x[i - 1].is_exact_zero()) continue;
        am = am + PadicScalar::from_rational(c, p, relprec) * x[i - 1];
      }
      pkg.qexp.push_back(am);
    }

    PadicScalar sp = PadicScalar::exact_zero(p);
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_exact_zero()) continue;
      PadicScalar w = PadicScalar::from_rational(
          pairing_weight(p, static_cast<long>(i + 1)), p, relprec);
      sp = sp + w * x[i] * x[i];
    }
    pkg.self_pairing = sp;
    out.push_back(std::move(pkg));
  }
  return out;
}

Rat pairing(const std::vector<Rat>& h, const std::vector<Rat>& k, long p) {
  require_supported_prime(p);
  if (h.size() != k.size())
    fail(ErrorCode::TruncationMismatch, "pairing inputs have different lengths");
  Rat acc(0);
  for (size_t i = 0; i < h.size(); ++i)
    if (h[i] != 0 && k[i] != 0)
      acc += pairing_weight(p, static_cast<long>(i + 1)) * h[i] * k[i];
  return acc;
}

PadicScalar pairing(const std::vector<PadicScalar>& h,
                    const std::vector<PadicScalar>& k, long p) {
  require_supported_prime(p);
  if (h.size() != k.size())
    fail(ErrorCode::TruncationMismatch, "pairing inputs have different lengths");
  PadicScalar acc = PadicScalar::exact_zero(p);
  long relprec = 1;
  for (const auto& x : h) relprec = std::max(relprec, x.relprec());
  for (size_t i = 0; i < h.size(); ++i) {
    if (h[i].is_exact_zero() || k[i].is_exact_zero()) continue;
    PadicScalar w = PadicScalar::from_rational(
        pairing_weight(p, static_cast<long>(i + 1)), p, relprec);
    acc = acc + w * h[i] * k[i];
  }
  return acc;
}

std::vector<Rat> express_in_f_basis(const QSeries& h, long p, long n) {
  require_supported_prime(p);
  if (h.lowest_order() < 1)
    fail(ErrorCode::NotCuspidal, "input is not O(q)");
  if (h.trunc() < n + 1)
    fail(ErrorCode::TruncationMismatch,
         "need q-precision >= n+1 to solve against n powers");
  QSeries f = hauptmodul_fp(p, n + 1);
  std::vector<QSeries> fpow(static_cast<size_t>(n + 1));
  if (n >= 1) fpow[1] = f;
  for (long i = 2; i <= n; ++i)
    fpow[static_cast<size_t>(i)] = (fpow[static_cast<size_t>(i - 1)] * f).truncated(n + 1);

  QSeries residual = h.truncated(n + 1);
  std::vector<Rat> coords(static_cast<size_t>(n), Rat(0));
  for (long i = 1; i <= n; ++i) {
    Rat ci = residual.coeff(i);
    coords[static_cast<size_t>(i - 1)] = ci;
    if (ci != 0)
      residual = residual - fpow[static_cast<size_t>(i)].scaled(ci);
  }
  return coords;
}

std::vector<PadicScalar> spectral_coefficients(
    const std::vector<Rat>& h_coords, const std::vector<EigenPackage>& eigens) {
  if (eigens.empty()) return {};
  long p = eigens[0].eigenvalue.prime();
  long relprec = eigens[0].eigenvalue.relprec();
  std::vector<PadicScalar> h;
  h.reserve(h_coords.size());
  for (const auto& c : h_coords)
    h.push_back(PadicScalar::from_rational(c, p, relprec));

  std::vector<PadicScalar> out;
  for (const auto& phi : eigens) {
    if (phi.coords.size() != h.size())
      fail(ErrorCode::TruncationMismatch,
           "eigenvector length differs from input coordinates");
    if (phi.self_pairing.is_zero())
      fail(ErrorCode::DegeneratePairing,
           "self-pairing of eigenfunction " + std::to_string(phi.index) +
               " vanishes at working precision");
    out.push_back(pairing(h, phi.coords, p) / phi.self_pairing);
  }
  return out;
}

std::vector<long> spectral_residual_valuations(
    const std::vector<Rat>& h_coords, const std::vector<EigenPackage>& eigens,
    long m_max, long radius_exponent) {
  if (eigens.empty()) fail(ErrorCode::Usage, "no eigenfunctions supplied");
  long p = eigens[0].eigenvalue.prime();
  long relprec = eigens[0].eigenvalue.relprec();
  std::vector<PadicScalar> res;
  for (const auto& c : h_coords)
    res.push_back(PadicScalar::from_rational(c, p, relprec));
  std::vector<PadicScalar> cs = spectral_coefficients(h_coords, eigens);

  auto norm_val = [&]() {
    long v = kValInf;
    for (size_t i = 0; i < res.size(); ++i) {
      long vi = res[i].is_exact_zero()
                    ? kValInf
                    : res[i].valuation() -
                          radius_exponent * static_cast<long>(i + 1);
      v = std::min(v, vi);
    }
    return v;
  };

  std::vector<long> out;
  out.push_back(norm_val());
  long mm = std::min<long>(m_max, static_cast<long>(eigens.size()));
  for (long m = 0; m < mm; ++m) {
    const auto& phi = eigens[static_cast<size_t>(m)];
    for (size_t i = 0; i < res.size(); ++i)
      res[i] = res[i] - cs[static_cast<size_t>(m)] * phi.coords[i];
    out.push_back(norm_val());
  }
  return out;
}

std::vector<PadicScalar> iterate_projection(const std::vector<Rat>& h_coords,
                                            const UMatrix& U,
                                            const PadicScalar& lambda1,
                                            long steps, long relprec) {
  long p = U.prime();
  PMat A = padic_matrix(U, relprec);
  PVec w;
  for (const auto& c : h_coords)
    w.push_back(PadicScalar::from_rational(c, p, relprec));
  for (long s = 0; s < steps; ++s) {
    w = mat_vec(A, w, p);
    for (auto& x : w) x = x / lambda1;
  }
  return w;
}

DiagonalizerResult diagonalizer(const UMatrix& U0, long count, long abs_prec,
                                const Rat& r) {
  long p = U0.prime();
  if (U0.radius() != 0)
    fail(ErrorCode::Usage, "diagonalizer expects the r = 0 matrix");
  if (count > U0.size()) fail(ErrorCode::Usage, "count exceeds matrix size");
  long e = rescale_exponent(p, r);

  // Work on the leading count x count block.
  UMatrix block(p, count, Rat(0), U0.qprec_used());
  for (long i = 1; i <= count; ++i)
    for (long j = 1; j <= count; ++j) block.entry(i, j) = U0.entry(i, j);

  std::vector<EigenPackage> eigens = eigen_solve(block, count, abs_prec, 1);
  long relprec = eigens[0].eigenvalue.relprec();

  // The congruence C = Id (mod p) is asserted at r = 1/2, whose exponent
  // 6/(p-1) can be half-integral; dominance and the congruence are judged
  // with that rational weight while the stored entries use radius r.
  Rat e_half(6, p - 1);
  DiagonalizerResult res;
  for (long j = 1; j <= count; ++j) {
    const auto& phi = eigens[static_cast<size_t>(j - 1)];
    // Coordinates in the radius-r orthonormal basis: a_i = x_i p^{-e i}.
    PVec a;
    for (long i = 1; i <= count; ++i)
      a.push_back(phi.coords[static_cast<size_t>(i - 1)] *
                  PadicScalar::from_rational(pow_rat(p, -e * i), p, relprec));
    // Integral normalisation with unit norm, then C_jj = 1.
    Rat mu_half;
    bool mu_set = false;
    for (long i = 1; i <= count; ++i) {
      const PadicScalar& x = phi.coords[static_cast<size_t>(i - 1)];
      if (x.is_exact_zero()) continue;
      Rat v = Rat(x.valuation()) - e_half * Rat(i);
      if (!mu_set || v < mu_half) {
        mu_half = v;
        mu_set = true;
      }
    }
    const PadicScalar& xj = phi.coords[static_cast<size_t>(j - 1)];
    if (xj.is_zero() ||
        Rat(xj.valuation()) - e_half * Rat(j) != mu_half)
      fail(ErrorCode::CongruenceViolation,
           "column " + std::to_string(j) +
               ": the diagonal coordinate is not the dominant one");
    PadicScalar scale = a[static_cast<size_t>(j - 1)];
    for (auto& ai : a) ai = ai / scale;
    for (long i = 1; i <= count; ++i) {
      if (i == j) continue;
      const PadicScalar& ai = a[static_cast<size_t>(i - 1)];
      if (ai.is_zero()) continue;
      Rat v = Rat(ai.valuation()) + (e_half - Rat(e)) * Rat(j - i);
      if (v < 1) res.congruent_to_identity = false;
    }
    res.C.push_back(a);
    res.mu.push_back(phi.eigenvalue);
  }

  // Verify C^{-1} M C is diagonal at working precision, with M the
  // radius-r block.
  UMatrix Mr = rescale(block, r);
  PMat M = padic_matrix(Mr, relprec);
  size_t m = static_cast<size_t>(count);
  // Invert C by Gauss-Jordan with min-valuation row pivoting.
  PMat W(m, PVec(2 * m, PadicScalar::exact_zero(p)));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) W[i][j] = res.C[j][i];  // columns -> matrix
    W[i][m + i] = PadicScalar::from_rational(Rat(1), p, relprec);
  }
  for (size_t k = 0; k < m; ++k) {
    size_t pr = m;
    long best = kValInf;
    for (size_t i = k; i < m; ++i)
      if (!W[i][k].is_zero() && W[i][k].valuation() < best) {
        best = W[i][k].valuation();
        pr = i;
      }
    if (pr == m)
      fail(ErrorCode::PrecisionLoss, "diagonalizer matrix not invertible");
    std::swap(W[k], W[pr]);
    PadicScalar piv = W[k][k];
    for (size_t j = 0; j < 2 * m; ++j) W[k][j] = W[k][j] / piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == k || W[i][k].is_zero()) continue;
      PadicScalar factor = W[i][k];
      for (size_t j = 0; j < 2 * m; ++j)
        W[i][j] = W[i][j] - factor * W[k][j];
    }
  }
  // P = C^{-1} M C
  PMat MC(m, PVec(m, PadicScalar::exact_zero(p)));
  for (size_t j = 0; j < m; ++j) {
    PVec col = mat_vec(M, res.C[j], p);
    for (size_t i = 0; i < m; ++i) MC[i][j] = col[i];
  }
  long min_bound = kValInf;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      PadicScalar acc = PadicScalar::exact_zero(p);
      for (size_t k = 0; k < m; ++k) {
        if (W[i][m + k].is_exact_zero() || MC[k][j].is_exact_zero()) continue;
        acc = acc + W[i][m + k] * MC[k][j];
      }
      long bound = acc.is_zero() ? acc.abs_prec() : acc.valuation();
      min_bound = std::min(min_bound, bound);
    }
  res.min_offdiag_zero_bound = min_bound;
  return res;
}

}  // namespace uop
