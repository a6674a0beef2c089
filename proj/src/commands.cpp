#include "uop/commands.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "uop/hauptmodul.hpp"
#include "uop/padic.hpp"
#include "uop/qseries.hpp"
#include "uop/spectral.hpp"
#include "uop/umatrix.hpp"

namespace uop {

namespace {

using nlohmann::json;

void check_format(const std::string& f) {
  if (f != "paper" && f != "json" && f != "csv")
    fail(ErrorCode::Usage, "unknown format '" + f + "'");
}

// The matrix entries are exact, so extra q-precision cannot change any
// output; an override below the minimum would, and is rejected.
void check_qprec(const RunConfig& cfg) {
  if (cfg.qprec != 0 && cfg.qprec < cfg.prime * cfg.size + 1)
    fail(ErrorCode::InsufficientQPrec,
         "q-precision override below the required p*n + 1");
}

std::string render_scalar(const PadicScalar& x, long digits) {
  if (x.is_exact_zero()) return "0";
  if (x.is_inexact_zero())
    return "O(" + std::to_string(x.prime()) + "^" +
           std::to_string(x.abs_prec()) + ")";
  return render_value(x.prime(), x.valuation(), x.unit_mod(digits), digits);
}

// JSON carries the compact "p^a*b" rendering (unit mod p^digits).
std::string scalar_json(const PadicScalar& x, long digits) {
  return x.str(digits);
}

std::string rat_str(const Rat& x) { return x.get_str(); }

QSeries load_qexp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot read q-expansion file " + path);
  std::vector<std::pair<long, Rat>> terms;
  long max_n = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    long n;
    std::string c;
    if (!(ls >> n >> c)) continue;  // blank / comment lines
    terms.emplace_back(n, rat_from_string(c));
    max_n = std::max(max_n, n);
  }
  if (terms.empty()) fail(ErrorCode::EmptyInput, "no terms in " + path);
  QSeries h = QSeries::zero(max_n + 1);
  for (const auto& [n, c] : terms)
    h = h + QSeries::monomial(c, n, max_n + 1);
  return h;
}

QSeries inverse_j(long T) {
  return delta(T) * eisenstein(4, T).pow(3).inverse();
}

}  // namespace

std::string render_value(long p, long val, const Int& unit_mod, long digits) {
  if (unit_mod == 0) return "0";
  std::string u = unit_mod.get_str();
  if (val == 0) return u;
  std::string base = std::to_string(p);
  if (val == 1) return base + "×" + u;
  return base + "^" + std::to_string(val) + "×" + u;
}

std::string cmd_hauptmodul(const RunConfig& cfg) {
  check_format(cfg.format);
  long p = cfg.prime;
  std::vector<Int> H = compute_Hp(p, 2 * (p + 2) + 4);
  BivarIntPoly I = derive_Ip(p, H);
  RecurrenceKernel K = recurrence_kernel(I);

  if (cfg.format == "json") {
    json j;
    j["p"] = p;
    for (const auto& h : H) j["H"].push_back(h.get_str());
    json terms = json::array();
    for (const auto& [k, v] : I.terms())
      terms.push_back({{"a", k.first}, {"b", k.second}, {"c", v.get_str()}});
    j["I"] = terms;
    json rows = json::array();
    for (long a = 1; a <= p; ++a) {
      json row = json::array();
      for (long b = 1; b <= p; ++b) row.push_back(K.at(a, b).get_str());
      rows.push_back(row);
    }
    j["M"] = rows;
    return j.dump(2) + "\n";
  }
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "a,b,M_ab\n";
    for (long a = 1; a <= p; ++a)
      for (long b = 1; b <= p; ++b)
        os << a << "," << b << "," << K.at(a, b).get_str() << "\n";
    return os.str();
  }
  std::ostringstream os;
  os << "p = " << p << "\n";
  os << "H coefficients (degree 0.." << p + 1 << "):";
  for (const auto& h : H) os << " " << h.get_str();
  os << "\n";
  os << "I terms:\n" << I.dump();
  os << "M = [";
  for (long a = 1; a <= p; ++a) {
    os << (a == 1 ? "[" : " [");
    for (long b = 1; b <= p; ++b)
      os << K.at(a, b).get_str() << (b == p ? "" : ", ");
    os << (a == p ? "]" : "],\n     ");
  }
  os << "]\n";
  return os.str();
}

std::string cmd_slopes(const RunConfig& cfg) {
  check_format(cfg.format);
  check_qprec(cfg);
  long p = cfg.prime;
  if (cfg.count > cfg.size)
    fail(ErrorCode::Usage, "count exceeds matrix size");
  UMatrix U = u_direct_cached(p, cfg.size, cfg.cache_dir);
  std::vector<Rat> sl = slopes(char_series(U), cfg.count);
  bool have_formula = (p == 2 || p == 3 || p == 5);

  if (cfg.format == "json") {
    json j;
    j["p"] = p;
    j["n"] = cfg.size;
    for (size_t i = 0; i < sl.size(); ++i) {
      json e;
      e["i"] = i + 1;
      e["slope"] = rat_str(sl[i]);
      if (have_formula)
        e["formula"] = rat_str(slope_formula(p, static_cast<long>(i + 1)));
      j["slopes"].push_back(e);
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "i,slope" << (have_formula ? ",formula\n" : "\n");
    for (size_t i = 0; i < sl.size(); ++i) {
      os << i + 1 << "," << rat_str(sl[i]);
      if (have_formula)
        os << "," << rat_str(slope_formula(p, static_cast<long>(i + 1)));
      os << "\n";
    }
    return os.str();
  }
  os << "p = " << p << ", n = " << cfg.size << "\n";
  for (size_t i = 0; i < sl.size(); ++i) {
    os << "s_" << i + 1 << " = " << rat_str(sl[i]);
    if (have_formula) {
      Rat f = slope_formula(p, static_cast<long>(i + 1));
      os << (f == sl[i] ? "  (= closed form)" : "  (closed form: " + rat_str(f) + ")");
    }
    os << "\n";
  }
  return os.str();
}

std::string cmd_eigen(const RunConfig& cfg) {
  check_format(cfg.format);
  check_qprec(cfg);
  UMatrix U = u_direct_cached(cfg.prime, cfg.size, cfg.cache_dir);
  std::vector<EigenPackage> eig =
      eigen_solve(U, cfg.count, cfg.prec, cfg.qexp_terms);
  long d = cfg.render_digits;

  if (cfg.format == "json") {
    json j;
    j["p"] = cfg.prime;
    j["n"] = cfg.size;
    for (const auto& e : eig) {
      json je;
      je["index"] = e.index;
      je["slope"] = rat_str(e.slope);
      je["eigenvalue"] = scalar_json(e.eigenvalue, d);
      for (const auto& a : e.qexp) je["qexp"].push_back(scalar_json(a, d));
      je["self_pairing"] = scalar_json(e.self_pairing, d);
      j["eigenfunctions"].push_back(je);
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "index,slope,eigenvalue";
    for (long m = 1; m <= cfg.qexp_terms; ++m) os << ",a" << m;
    os << "\n";
    for (const auto& e : eig) {
      os << e.index << "," << rat_str(e.slope) << ","
         << render_scalar(e.eigenvalue, d);
      for (const auto& a : e.qexp) os << "," << render_scalar(a, d);
      os << "\n";
    }
    return os.str();
  }
  os << "p = " << cfg.prime << ", n = " << cfg.size
     << ", units mod " << cfg.prime << "^" << d << "\n";
  for (const auto& e : eig) {
    os << "phi_" << e.index << ": slope " << rat_str(e.slope)
       << ", eigenvalue " << render_scalar(e.eigenvalue, d) << "\n  q";
    for (size_t m = 1; m < e.qexp.size(); ++m)
      os << " + " << render_scalar(e.qexp[m], d) << "q^" << m + 1;
    os << " + ...\n";
  }
  return os.str();
}

std::string cmd_spectral(const RunConfig& cfg) {
  check_format(cfg.format);
  check_qprec(cfg);
  long p = cfg.prime;
  long n = cfg.size;
  QSeries h = cfg.input.empty() ? inverse_j(n + 2) : load_qexp(cfg.input);
  std::vector<Rat> hc = express_in_f_basis(h, p, n);
  UMatrix U = u_direct_cached(p, n, cfg.cache_dir);
  std::vector<EigenPackage> eig = eigen_solve(U, cfg.count, cfg.prec, 1);
  std::vector<PadicScalar> cs = spectral_coefficients(hc, eig);
  long e = rescale_exponent(p, rat_from_string(cfg.radius));
  std::vector<long> resv =
      spectral_residual_valuations(hc, eig, cfg.count, e);
  long d = cfg.render_digits;

  if (cfg.format == "json") {
    json j;
    j["p"] = p;
    j["n"] = n;
    j["radius"] = cfg.radius;
    for (size_t i = 0; i < cs.size(); ++i) {
      json je;
      je["j"] = i + 1;
      je["c"] = scalar_json(cs[i], d);
      je["residual_valuation"] = resv[i + 1];
      j["coefficients"].push_back(je);
    }
    j["initial_residual_valuation"] = resv[0];
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "j,c_j,residual_valuation\n";
    for (size_t i = 0; i < cs.size(); ++i)
      os << i + 1 << "," << render_scalar(cs[i], d) << "," << resv[i + 1]
         << "\n";
    return os.str();
  }
  os << "p = " << p << ", n = " << n << ", radius " << cfg.radius
     << ", units mod " << p << "^" << d << "\n";
  for (size_t i = 0; i < cs.size(); ++i)
    os << "c_" << i + 1 << " = " << render_scalar(cs[i], d)
       << "   (residual valuation " << resv[i + 1] << ")\n";
  return os.str();
}

VerifyResult cmd_verify(const RunConfig& cfg) {
  long p = cfg.prime;
  long n = cfg.size;
  std::ostringstream os;
  bool all_pass = true;
  auto want = [&](const char* name) {
    return cfg.suite == "all" || cfg.suite == name;
  };
  auto report = [&](const char* name, bool ok, const std::string& detail) {
    os << name << ": " << (ok ? "pass" : "FAIL");
    if (!detail.empty()) os << " (" << detail << ")";
    os << "\n";
    if (!ok) all_pass = false;
  };
  bool matched = false;

  if (want("identities")) {
    matched = true;
    IdentityReport r = verify_weight_identities(200);
    report("identities", r.pass,
           "through order " + std::to_string(r.orders_checked));
  }
  if (want("recurrence")) {
    matched = true;
    std::vector<Int> H = compute_Hp(p, 2 * (p + 2) + 4);
    RecurrenceKernel K = recurrence_kernel(derive_Ip(p, H));
    UMatrix U = u_direct_cached(p, n, cfg.cache_dir);
    UMatrix R = u_recurrence(p, n, K, U);
    report("recurrence", R == U, "n = " + std::to_string(n));
  }
  if (want("symmetry")) {
    matched = true;
    UMatrix U = u_direct_cached(p, n, cfg.cache_dir);
    SymmetryReport r = symmetry_check(U, n);
    report("symmetry", r.pass,
           r.pass ? "n = " + std::to_string(n)
                  : "fails at (" + std::to_string(r.bad_i) + "," +
                        std::to_string(r.bad_j) + ")");
  }
  if (want("support")) {
    matched = true;
    UMatrix U = u_direct_cached(p, n, cfg.cache_dir);
    bool ok = true;
    for (long i = 1; i <= n && ok; ++i)
      for (long j = 1; j <= n && ok; ++j)
        if ((i > p * j || j > p * i) && U.entry(i, j) != 0) ok = false;
    report("support", ok, "band |i,j| <= p * min");
  }
  if (want("ratgen")) {
    matched = true;
    std::vector<Int> H = compute_Hp(p, 2 * (p + 2) + 4);
    BivarIntPoly I = derive_Ip(p, H);
    UMatrix U = u_direct_cached(p, n, cfg.cache_dir);
    RatGenReport r = rational_generation_check(I, U, n);
    report("ratgen", r.pass,
           "sign " + std::string(r.sign < 0 ? "-" : "+") + ", through " +
               std::to_string(r.checked_through));
  }
  if (want("factorization")) {
    matched = true;
    if (p == 2 || p == 3 || p == 5) {
      ConjectureReport r = conjecture_check(p, n, std::min<long>(n, 12),
                                            p == 2 ? std::min<long>(n, 20) : 0);
      std::string detail;
      for (const auto& f : r.failures) detail += (detail.empty() ? "" : "; ") + f;
      report("factorization", r.pass(), detail);
    } else {
      report("factorization", true, "no closed form for p = " +
                                        std::to_string(p) + "; skipped");
    }
  }
  if (want("diagonalizer")) {
    matched = true;
    if (p == 2 || p == 3 || p == 5) {
      Rat r = (p == 5) ? Rat(1, 3) : Rat(1, 2);
      UMatrix U = u_direct_cached(p, n, cfg.cache_dir);
      long count = std::min<long>(n / 2, 8);
      DiagonalizerResult d = diagonalizer(U, count, cfg.prec, r);
      bool ok = d.congruent_to_identity && d.min_offdiag_zero_bound > 0;
      report("diagonalizer", ok,
             "offdiag zero to O(p^" +
                 std::to_string(d.min_offdiag_zero_bound) + ")");
    } else {
      report("diagonalizer", true, "no congruence claim for p = " +
                                       std::to_string(p) + "; skipped");
    }
  }
  if (!matched)
    fail(ErrorCode::Usage, "unknown verify suite '" + cfg.suite + "'");
  os << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return {os.str(), all_pass};
}

}  // namespace uop
