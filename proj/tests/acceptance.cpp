// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "golden_eigen.hpp"
#include "uop/commands.hpp"
#include "uop/hauptmodul.hpp"
#include "uop/qseries.hpp"
#include "uop/spectral.hpp"
#include "uop/umatrix.hpp"

using namespace uop;

namespace {

int failures = 0;

void criterion(const char* id, const char* what,
               const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::printf("%s %s: %s (%lldms%s%s)\n", id, what, ok ? "pass" : "FAIL",
              static_cast<long long>(ms), detail.empty() ? "" : "; ",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool coeff_matches(const PadicScalar& x, const GoldenCoeff& g, long digits) {
  return !x.is_zero() && x.valuation() == g.val && x.unit_mod(digits) == Int(g.unit);
}

}  // namespace

int main() {
  criterion("C1", "kernel matrices for p = 2, 3", [](std::string& d) {
    RunConfig cfg;
    cfg.prime = 2;
    std::string out2 = cmd_hauptmodul(cfg);
    cfg.prime = 3;
    std::string out3 = cmd_hauptmodul(cfg);
    bool ok2 = out2.find("[[48, 1],") != std::string::npos &&
               out2.find("[4096, 0]]") != std::string::npos;
    bool ok3 = out3.find("[[270, 36, 1],") != std::string::npos &&
               out3.find("[26244, 729, 0],") != std::string::npos &&
               out3.find("[531441, 0, 0]]") != std::string::npos;
    if (!ok2) d = "p=2 output wrong";
    if (!ok3) d += (d.empty() ? "" : "; ") + std::string("p=3 output wrong");
    return ok2 && ok3;
  });

  std::vector<std::pair<long, UMatrix>> mats;  // reused across criteria
  criterion("C2", "recurrence equals direct construction, n = 40", [&](std::string& d) {
    bool ok = true;
    for (long p : {2L, 3L, 5L, 7L, 13L}) {
      UMatrix U = u_direct(p, 40);
      RecurrenceKernel K =
          recurrence_kernel(derive_Ip(p, compute_Hp(p, 2 * (p + 2) + 4)));
      if (!(u_recurrence(p, 40, K, U) == U)) {
        ok = false;
        d += "p=" + std::to_string(p) + " differs ";
      }
      mats.emplace_back(p, std::move(U));
    }
    return ok;
  });

  criterion("C3", "slope formulas (p=2 x15, p=3 x10, p=5 x10)", [](std::string& d) {
    struct Want { long p; long count; };
    bool ok = true;
    for (Want w : {Want{2, 15}, Want{3, 10}, Want{5, 10}}) {
      std::vector<Rat> sl = slopes(stabilized_char_series(w.p, w.count), w.count);
      for (long i = 1; i <= w.count; ++i)
        if (sl[static_cast<size_t>(i - 1)] != slope_formula(w.p, i)) {
          ok = false;
          d += "p=" + std::to_string(w.p) + " i=" + std::to_string(i) + " ";
        }
    }
    // first three p=5 slopes are 1, 4, 5
    std::vector<Rat> s5 = slopes(stabilized_char_series(5, 3), 3);
    if (!(s5[0] == 1 && s5[1] == 4 && s5[2] == 5)) {
      ok = false;
      d += "p=5 leading slopes not 1,4,5";
    }
    return ok;
  });

  criterion("C4", "LDU factorization conjecture, n = 40", [](std::string& d) {
    bool ok = true;
    for (long p : {2L, 3L, 5L}) {
      ConjectureReport rep = conjecture_check(p, 40, 12, p == 2 ? 20 : 0);
      if (!rep.pass()) {
        ok = false;
        d += "p=" + std::to_string(p) + ": " +
             (rep.failures.empty() ? "?" : rep.failures.front()) + " ";
      }
    }
    return ok;
  });

  std::vector<EigenPackage> eig5;
  criterion("C5", "golden q-expansion tables, 20 eigenfunctions x 20 terms",
            [&](std::string& d) {
    UMatrix U = u_direct(5, 45);
    eig5 = eigen_solve(U, 20, 55, 20);
    bool ok = true;
    for (size_t k = 0; k < 20; ++k)
      for (size_t m = 0; m < 20; ++m)
        if (!coeff_matches(eig5[k].qexp[m], kGoldenQexp[k][m], 10)) {
          ok = false;
          if (d.size() < 120)
            d += "phi" + std::to_string(k + 1) + " a" + std::to_string(m + 1) + " ";
        }
    return ok;
  });

  criterion("C6", "golden spectral coefficients of 1/j", [&](std::string& d) {
    long n = 45;
    QSeries h = delta(n + 2) * eisenstein(4, n + 2).pow(3).inverse();
    std::vector<Rat> hc = express_in_f_basis(h, 5, n);
    if (eig5.empty()) {
      d = "eigen data unavailable";
      return false;
    }
    std::vector<EigenPackage> first10(eig5.begin(), eig5.begin() + 10);
    std::vector<PadicScalar> cs = spectral_coefficients(hc, first10);
    bool ok = true;
    for (size_t j = 0; j < 10; ++j)
      if (!coeff_matches(cs[j], kGoldenSpectral[j], 10)) {
        ok = false;
        d += "c" + std::to_string(j + 1) + " ";
      }
    return ok;
  });

  criterion("C7", "stability of phi_1 across truncation sizes", [](std::string& d) {
    auto phi1 = [](long n, long prec) {
      return eigen_solve(u_direct(5, n), 1, prec, 3)[0];
    };
    EigenPackage big = phi1(24, 40);
    struct Want { long n; long mod; };
    bool ok = true;
    for (Want w : {Want{3, 8}, Want{4, 10}, Want{5, 16}}) {
      EigenPackage small = phi1(w.n, 30);
      for (size_t m = 0; m < 3; ++m)
        if (!small.qexp[m].congruent(big.qexp[m], w.mod)) {
          ok = false;
          d += "n=" + std::to_string(w.n) + " a" + std::to_string(m + 1) +
               " differs mod 5^" + std::to_string(w.mod) + " ";
        }
    }
    return ok;
  });

  criterion("C8", "eta-quotient identities to O(q^200)", [](std::string& d) {
    IdentityReport rep = verify_weight_identities(200);
    if (!rep.pass)
      d = "first failure at order " + std::to_string(rep.first_fail_order);
    return rep.pass;
  });

  criterion("C9a", "support band, all primes incl. p = 13 at n = 40",
            [&](std::string& d) {
    bool ok = true;
    for (const auto& [p, U] : mats)
      for (long i = 1; i <= 40; ++i)
        for (long j = 1; j <= 40; ++j)
          if ((i > p * j || j > p * i) && U.entry(i, j) != 0) {
            ok = false;
            d = "p=" + std::to_string(p);
          }
    return ok && !mats.empty();
  });

  criterion("C9b", "symmetry identity, all primes at n = 40", [&](std::string& d) {
    bool ok = !mats.empty();
    for (const auto& [p, U] : mats)
      if (!symmetry_check(U, 40).pass) {
        ok = false;
        d = "p=" + std::to_string(p);
      }
    return ok;
  });

  criterion("C9c", "char-series polygon equals LDU diagonal polygon",
            [&](std::string& d) {
    bool ok = true;
    for (const auto& [p, U] : mats) {
      if (p != 2 && p != 3 && p != 5) continue;
      std::vector<Rat> s1 = slopes(char_series(U), 30);
      LDUFactorization f = ldu(U);
      std::vector<NewtonPoint> pts(1);
      Rat acc(0);
      for (long i = 1; i <= 40; ++i) {
        acc += Rat(valuation_rat(f.d(i), p));
        NewtonPoint pt;
        pt.degree = i;
        pt.valuation = acc;
        pts.push_back(pt);
      }
      std::vector<Rat> s2 = newton_polygon(pts).slope_list();
      for (size_t k = 0; k < 30; ++k)
        if (s1[k] != s2[k]) {
          ok = false;
          d += "p=" + std::to_string(p) + " k=" + std::to_string(k + 1) + " ";
          break;
        }
    }
    return ok;
  });

  criterion("C9d", "diagonalizer congruent to identity (p = 2, 3, 5)",
            [](std::string& d) {
    bool ok = true;
    for (long p : {2L, 3L, 5L}) {
      Rat r = (p == 5) ? Rat(1, 3) : Rat(1, 2);
      DiagonalizerResult dg = diagonalizer(u_direct(p, 20), 8, 20, r);
      bool this_ok = dg.congruent_to_identity && dg.min_offdiag_zero_bound > 0;
      if (p == 2 && !this_ok) ok = false;  // proven regime: hard failure
      d += "p=" + std::to_string(p) + (this_ok ? " holds " : " VIOLATED ");
      if (!this_ok && p != 2) ok = false;  // conjectured but expected
    }
    return ok;
  });

  criterion("C9e", "pairing orthogonality of distinct eigenfunctions",
            [&](std::string& d) {
    if (eig5.empty()) {
      d = "eigen data unavailable";
      return false;
    }
    bool ok = true;
    for (size_t i = 0; i < 10; ++i)
      for (size_t j = i + 1; j < 10; ++j) {
        PadicScalar pr = pairing(eig5[i].coords, eig5[j].coords, 5);
        if (!pr.is_zero()) {
          ok = false;
          d += std::to_string(i + 1) + "/" + std::to_string(j + 1) + " ";
        }
      }
    return ok;
  });

  criterion("C9f", "iterated U/lambda_1 converges to the first projection",
            [&](std::string& d) {
    long n = 30;
    UMatrix U = u_direct(5, n);
    QSeries h = delta(n + 2) * eisenstein(4, n + 2).pow(3).inverse();
    std::vector<Rat> hc = express_in_f_basis(h, 5, n);
    auto eig = eigen_solve(U, 1, 40, 1);
    std::vector<PadicScalar> cs =
        spectral_coefficients(hc, eig);  // c_1 only
    std::vector<PadicScalar> w =
        iterate_projection(hc, U, eig[0].eigenvalue, 20, 60);
    bool ok = true;
    for (size_t i = 0; i < w.size(); ++i) {
      PadicScalar diff = w[i] - cs[0] * eig[0].coords[i];
      if (!(diff.is_zero() || diff.valuation() >= 8)) {
        ok = false;
        d = "component " + std::to_string(i + 1) + " differs below 5^8";
        break;
      }
    }
    return ok;
  });

  criterion("C9g", "residual valuations non-decreasing, increasing per 2 steps",
            [&](std::string& d) {
    long n = 40;
    QSeries h = delta(n + 2) * eisenstein(4, n + 2).pow(3).inverse();
    std::vector<Rat> hc = express_in_f_basis(h, 5, n);
    auto eig = eigen_solve(u_direct(5, n), 10, 40, 1);
    std::vector<long> v = spectral_residual_valuations(hc, eig, 9, 1);
    bool ok = true;
    for (size_t m = 0; m + 1 < v.size(); ++m) {
      if (v[m + 1] < v[m]) ok = false;
      if (m + 2 < v.size() && v[m + 2] <= v[m]) ok = false;
    }
    if (!ok) {
      d = "sequence:";
      for (long x : v) d += " " + std::to_string(x);
    }
    return ok;
  });

  std::printf("%s\n", failures == 0 ? "ACCEPTANCE: ALL PASS"
                                    : "ACCEPTANCE: FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
