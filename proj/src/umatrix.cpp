#include "uop/umatrix.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "uop/qseries.hpp"

namespace uop {

UMatrix u_direct(long p, long n) {
  require_supported_prime(p);
  if (n < 1) fail(ErrorCode::Usage, "matrix size must be >= 1");
  long Q = p * n + 1;
  QSeries f = hauptmodul_fp(p, Q);

  std::vector<QSeries> fpow(static_cast<size_t>(n + 1));
  fpow[1] = f;
  for (long i = 2; i <= n; ++i)
    fpow[static_cast<size_t>(i)] = fpow[static_cast<size_t>(i - 1)] * f;

  // Short copies for the triangular solve (exponents <= n are enough).
  std::vector<QSeries> fshort(static_cast<size_t>(n + 1));
  for (long i = 1; i <= n; ++i)
    fshort[static_cast<size_t>(i)] =
        fpow[static_cast<size_t>(i)].truncated(n + 1);

  UMatrix U(p, n, Rat(0), Q);
  for (long j = 1; j <= n; ++j) {
    QSeries Uj = U_on_qexp(fpow[static_cast<size_t>(j)].truncated(Q), p);
    QSeries residual = Uj.truncated(std::min<long>(Uj.trunc(), n + 1));
    long imax = std::min(p * j, n);
    for (long i = 1; i <= imax; ++i) {
      Rat uij = residual.coeff(i);
      U.entry(i, j) = uij;
      if (uij != 0)
        residual = residual - fshort[static_cast<size_t>(i)].scaled(uij);
    }
    // U(f^j) is a polynomial of degree <= pj in f, so after removing the
    // tracked components nothing may remain below q^{n+1}.
    for (long m = 0; m < residual.trunc(); ++m)
      if (residual.coeff(m) != 0)
        fail(ErrorCode::InsufficientQPrec,
             "column " + std::to_string(j) +
                 " residual nonzero at q^" + std::to_string(m));
  }
  return U;
}

UMatrix u_recurrence(long p, long n, const RecurrenceKernel& M,
                     const UMatrix& base) {
  require_supported_prime(p);
  if (M.p != p) fail(ErrorCode::Usage, "kernel prime mismatch");
  if (base.prime() != p || base.size() < n || base.radius() != 0)
    fail(ErrorCode::BaseRegionIncomplete,
         "base matrix must be an r=0 matrix covering size n");
  UMatrix U(p, n, Rat(0), base.qprec_used());
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j)
      if (i <= p || j <= p) U.entry(i, j) = base.entry(i, j);
  for (long i = p + 1; i <= n; ++i)
    for (long j = p + 1; j <= n; ++j) {
      Rat acc(0);
      for (long a = 1; a <= p; ++a)
        for (long b = 1; b <= p; ++b) {
          const Int& m = M.at(a, b);
          if (m == 0) continue;
          const Rat& prev = U.entry(i - a, j - b);
          if (prev != 0) acc += Rat(m) * prev;
        }
      U.entry(i, j) = acc;
    }
  return U;
}

long rescale_exponent(long p, const Rat& r) {
  Rat e = Rat(12) * r / Rat(p - 1);
  if (e.get_den() != 1 || e < 0)
    fail(ErrorCode::IrrationalScale,
         "12r/(p-1) must be a nonnegative integer (r = " + r.get_str() + ")");
  return mpz_get_si(e.get_num().get_mpz_t());
}

UMatrix rescale(const UMatrix& U0, const Rat& r) {
  long p = U0.prime();
  long e = rescale_exponent(p, r);
  UMatrix U(p, U0.size(), r, U0.qprec_used());
  for (long i = 1; i <= U0.size(); ++i)
    for (long j = 1; j <= U0.size(); ++j) {
      if (U0.entry(i, j) == 0) continue;
      U.entry(i, j) = U0.entry(i, j) * pow_rat(p, e * (j - i));
    }
  return U;
}

SymmetryReport symmetry_check(const UMatrix& U0, long n) {
  if (U0.radius() != 0) fail(ErrorCode::Usage, "symmetry check expects r = 0");
  long p = U0.prime();
  long c = 12 / (p - 1);
  SymmetryReport rep;
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) {
      Rat lhs = Rat(i) * Rat(pow_int(p, static_cast<unsigned long>(c * j))) *
                U0.entry(i, j);
      Rat rhs = Rat(j) * Rat(pow_int(p, static_cast<unsigned long>(c * i))) *
                U0.entry(j, i);
      if (lhs != rhs) {
        rep.pass = false;
        rep.bad_i = i;
        rep.bad_j = j;
        return rep;
      }
    }
  return rep;
}

std::string cache_file_name(long p, long n, const Rat& r) {
  std::string rs = r.get_str();
  for (auto& ch : rs)
    if (ch == '/') ch = '_';
  return "umatrix-p" + std::to_string(p) + "-n" + std::to_string(n) + "-r" +
         rs + ".json";
}

void save_matrix(const UMatrix& U, const std::string& path) {
  nlohmann::json j;
  j["schema"] = 1;
  j["p"] = U.prime();
  j["n"] = U.size();
  j["r"] = U.radius().get_str();
  j["qprec_used"] = U.qprec_used();
  nlohmann::json rows = nlohmann::json::array();
  for (long i = 1; i <= U.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (long k = 1; k <= U.size(); ++k) {
      const Rat& x = U.entry(i, k);
      row.push_back(x.get_num().get_str() + "/" + x.get_den().get_str());
    }
    rows.push_back(row);
  }
  j["entries"] = rows;
  std::ofstream out(path);
  if (!out) fail(ErrorCode::Io, "cannot write cache file " + path);
  out << j.dump() << "\n";
}

UMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot read cache file " + path);
  nlohmann::json j;
  in >> j;
  if (!j.contains("schema") || j["schema"].get<int>() != 1)
    fail(ErrorCode::Io, "unsupported cache schema in " + path);
  long p = j["p"].get<long>();
  long n = j["n"].get<long>();
  Rat r = rat_from_string(j["r"].get<std::string>());
  UMatrix U(p, n, r, j["qprec_used"].get<long>());
  const auto& rows = j["entries"];
  for (long i = 1; i <= n; ++i)
    for (long k = 1; k <= n; ++k)
      U.entry(i, k) = rat_from_string(
          rows[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)]
              .get<std::string>());
  return U;
}

UMatrix u_direct_cached(long p, long n, const std::string& dir) {
  std::string cache_dir = dir;
  if (cache_dir.empty()) {
    const char* env = std::getenv("UOP_CACHE_DIR");
    if (env) cache_dir = env;
  }
  if (cache_dir.empty()) return u_direct(p, n);
  std::filesystem::create_directories(cache_dir);
  std::string path = cache_dir + "/" + cache_file_name(p, n, Rat(0));
  if (std::filesystem::exists(path)) {
    UMatrix U = load_matrix(path);
    if (U.prime() == p && U.size() == n) return U;
  }
  UMatrix U = u_direct(p, n);
  save_matrix(U, path);
  return U;
}

}  // namespace uop
