#include "uop/padic.hpp"

#include <algorithm>
#include <cstdlib>

namespace uop {

namespace {

Int mod_pow_p(long p, long k) {
  // p^k, k >= 0
  return pow_int(p, static_cast<unsigned long>(k));
}

Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::DivisionByZero, "element not invertible modulo p^k");
  return r;
}

Int mod_reduce(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// x mod p^k for a p-integral rational x.
Int rat_mod(const Rat& x, long p, const Int& pk) {
  Int num = mod_reduce(x.get_num(), pk);
  Int den = mod_reduce(x.get_den(), pk);
  return mod_reduce(num * mod_inverse(den, pk), pk);
}

}  // namespace

PadicScalar PadicScalar::exact_zero(long p) {
  require_supported_prime(p);
  return PadicScalar(p, State::ExactZero, 0, Int(0), 0);
}

PadicScalar PadicScalar::inexact_zero(long p, long abs_prec) {
  require_supported_prime(p);
  return PadicScalar(p, State::InexactZero, abs_prec, Int(0), 0);
}

PadicScalar PadicScalar::from_integer(const Int& x, long p, long relprec) {
  return from_rational(Rat(x), p, relprec);
}

PadicScalar PadicScalar::from_rational(const Rat& x, long p, long relprec) {
  require_supported_prime(p);
  if (relprec <= 0) fail(ErrorCode::Usage, "relprec must be positive");
  if (x == 0) return exact_zero(p);
  long v = valuation_rat(x, p);
  Rat u = x * pow_rat(p, -v);
  Int pk = mod_pow_p(p, relprec);
  return PadicScalar(p, State::Nonzero, v, rat_mod(u, p, pk), relprec);
}

PadicScalar PadicScalar::from_parts(long p, long val, const Int& unit,
                                    long relprec) {
  require_supported_prime(p);
  if (relprec <= 0) fail(ErrorCode::Usage, "relprec must be positive");
  Int pk = mod_pow_p(p, relprec);
  Int u = mod_reduce(unit, pk);
  if (u == 0) return inexact_zero(p, val + relprec);
  if (u % p == 0)
    fail(ErrorCode::InvariantViolation, "unit divisible by p in from_parts");
  return PadicScalar(p, State::Nonzero, val, u, relprec);
}

long PadicScalar::valuation() const {
  if (state_ == State::ExactZero) return kValInf;
  return val_;
}

long PadicScalar::abs_prec() const {
  switch (state_) {
    case State::ExactZero:
      return kValInf;
    case State::InexactZero:
      return val_;
    default:
      return val_ + rel_;
  }
}

Int PadicScalar::lift() const {
  if (is_zero()) return Int(0);
  if (val_ < 0)
    fail(ErrorCode::Usage, "lift requires nonnegative valuation");
  return pow_int(p_, static_cast<unsigned long>(val_)) * unit_;
}

Int PadicScalar::unit_mod(long k) const {
  if (state_ != State::Nonzero)
    fail(ErrorCode::Usage, "unit_mod on a zero value");
  if (k > rel_)
    fail(ErrorCode::PrecisionExhausted,
         "requested " + std::to_string(k) + " digits, have " +
             std::to_string(rel_));
  return mod_reduce(unit_, mod_pow_p(p_, k));
}

PadicScalar PadicScalar::operator-() const {
  if (state_ != State::Nonzero) return *this;
  Int pk = mod_pow_p(p_, rel_);
  return PadicScalar(p_, State::Nonzero, val_, pk - unit_, rel_);
}

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
  if (a.p_ != b.p_) fail(ErrorCode::Usage, "mixed primes");
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  long abs = std::min(a.abs_prec(), b.abs_prec());
  if (a.is_inexact_zero() && b.is_inexact_zero())
    return PadicScalar::inexact_zero(a.p_, abs);
  if (a.is_inexact_zero() || b.is_inexact_zero()) {
    const PadicScalar& nz = a.is_inexact_zero() ? b : a;
    if (nz.val_ >= abs) return PadicScalar::inexact_zero(a.p_, abs);
    return PadicScalar(a.p_, PadicScalar::State::Nonzero, nz.val_,
                       nz.unit_mod(abs - nz.val_), abs - nz.val_);
  }
  long m = std::min(a.val_, b.val_);
  long k = abs - m;
  if (k <= 0) return PadicScalar::inexact_zero(a.p_, abs);
  Int pk = mod_pow_p(a.p_, k);
  Int s = a.unit_ * mod_pow_p(a.p_, a.val_ - m) +
          b.unit_ * mod_pow_p(a.p_, b.val_ - m);
  s = mod_reduce(s, pk);
  if (s == 0) return PadicScalar::inexact_zero(a.p_, abs);
  long v = valuation_int(s, a.p_);
  long rel = abs - m - v;
  Int unit = mod_reduce(s / mod_pow_p(a.p_, v), mod_pow_p(a.p_, rel));
  if (unit == 0) return PadicScalar::inexact_zero(a.p_, abs);
  return PadicScalar(a.p_, PadicScalar::State::Nonzero, m + v, unit, rel);
}

PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) {
  return a + (-b);
}

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
  if (a.p_ != b.p_) fail(ErrorCode::Usage, "mixed primes");
  if (a.is_exact_zero() || b.is_exact_zero())
    return PadicScalar::exact_zero(a.p_);
  if (a.is_inexact_zero() || b.is_inexact_zero()) {
    // O(p^Na) * p^vb unit = O(p^{Na+vb}); O(p^Na) * O(p^Nb) = O(p^{Na+Nb}).
    return PadicScalar::inexact_zero(a.p_, a.val_ + b.val_);
  }
  long rel = std::min(a.rel_, b.rel_);
  Int pk = mod_pow_p(a.p_, rel);
  return PadicScalar(a.p_, PadicScalar::State::Nonzero, a.val_ + b.val_,
                     mod_reduce(a.unit_ * b.unit_, pk), rel);
}

PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) {
  if (a.p_ != b.p_) fail(ErrorCode::Usage, "mixed primes");
  if (b.is_zero())
    fail(ErrorCode::DivisionByZero, "division by (inexact) zero p-adic");
  if (a.is_exact_zero()) return PadicScalar::exact_zero(a.p_);
  if (a.is_inexact_zero())
    return PadicScalar::inexact_zero(a.p_, a.val_ - b.val_);
  long rel = std::min(a.rel_, b.rel_);
  Int pk = mod_pow_p(a.p_, rel);
  Int u = mod_reduce(a.unit_ * mod_inverse(b.unit_, pk), pk);
  return PadicScalar(a.p_, PadicScalar::State::Nonzero, a.val_ - b.val_, u,
                     rel);
}

bool PadicScalar::congruent(const PadicScalar& o, long abs) const {
  PadicScalar d = *this - o;
  if (d.is_exact_zero()) return true;
  if (d.is_inexact_zero()) {
    if (d.abs_prec() >= abs) return true;
    fail(ErrorCode::PrecisionExhausted,
         "cannot certify congruence mod p^" + std::to_string(abs) +
             ": difference only known to O(p^" + std::to_string(d.abs_prec()) +
             ")");
  }
  return d.val_ >= abs;
}

std::string PadicScalar::str(long render_rel) const {
  if (is_exact_zero()) return "0";
  if (is_inexact_zero())
    return "0 + O(" + std::to_string(p_) + "^" + std::to_string(val_) + ")";
  long k = std::min(rel_, render_rel);
  std::string b = unit_mod(k).get_str();
  if (val_ == 0) return b;
  return std::to_string(p_) + "^" + std::to_string(val_) + "*" + b;
}

long valuation_of_rational(const Rat& x, long p) {
  require_supported_prime(p);
  return valuation_rat(x, p);
}

std::vector<Rat> NewtonPolygon::slope_list() const {
  std::vector<Rat> out;
  for (const auto& seg : segments)
    for (long i = 0; i < seg.length; ++i) out.push_back(seg.slope);
  return out;
}

NewtonPolygon newton_polygon(const std::vector<NewtonPoint>& points) {
  // Collect finite points, keeping the lowest valuation per degree.
  std::vector<std::pair<long, Rat>> pts;
  for (const auto& pt : points) {
    if (pt.infinite) continue;
    pts.emplace_back(pt.degree, pt.valuation);
  }
  if (pts.size() < 2)
    fail(ErrorCode::EmptyInput, "newton_polygon needs at least two finite points");
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return a.second < b.second;
            });
  std::vector<std::pair<long, Rat>> uniq;
  for (auto& pr : pts)
    if (uniq.empty() || uniq.back().first != pr.first) uniq.push_back(pr);

  // Monotone lower hull; collinear interior points dropped.
  std::vector<std::pair<long, Rat>> hull;
  for (const auto& c : uniq) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // pop b if slope(a,b) >= slope(b,c)
      Rat lhs = (b.second - a.second) * Rat(c.first - b.first);
      Rat rhs = (c.second - b.second) * Rat(b.first - a.first);
      if (lhs >= rhs)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(c);
  }

  NewtonPolygon np;
  np.vertices = hull;
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    NewtonSegment seg;
    seg.length = hull[k + 1].first - hull[k].first;
    seg.slope = (hull[k + 1].second - hull[k].second) / Rat(seg.length);
    np.segments.push_back(seg);
  }
  return np;
}

namespace {

// Evaluate an integer polynomial mod m by Horner.
Int eval_mod(const std::vector<Int>& c, const Int& z, const Int& m) {
  Int acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = mod_reduce(acc * z + c[i], m);
  return acc;
}

}  // namespace

PadicRootReport padic_roots(const std::vector<Rat>& coeffs, long p,
                            long abs_prec) {
  require_supported_prime(p);
  PadicRootReport rep;

  size_t lo = 0;
  while (lo < coeffs.size() && coeffs[lo] == 0) ++lo;
  if (lo == coeffs.size())
    fail(ErrorCode::EmptyInput, "padic_roots: zero polynomial");
  size_t hi = coeffs.size();
  while (hi > lo && coeffs[hi - 1] == 0) --hi;
  rep.zero_multiplicity = static_cast<long>(lo);
  if (lo > 0) rep.roots.push_back(PadicScalar::exact_zero(p));

  std::vector<Rat> d(coeffs.begin() + lo, coeffs.begin() + hi);
  if (d.size() < 2) return rep;  // constant after stripping: no nonzero roots

  std::vector<NewtonPoint> pts;
  for (size_t i = 0; i < d.size(); ++i) {
    NewtonPoint pt;
    pt.degree = static_cast<long>(i);
    long v = valuation_rat(d[i], p);
    if (v == kValInf)
      pt.infinite = true;
    else
      pt.valuation = Rat(v);
    pts.push_back(pt);
  }
  NewtonPolygon np = newton_polygon(pts);

  for (const auto& seg : np.segments) {
    Rat m = -seg.slope;  // valuation of the roots on this segment
    rep.root_valuations.emplace_back(m, seg.length);
  }

  long seg_start = np.vertices.front().first;
  for (const auto& seg : np.segments) {
    long i0 = seg_start;
    seg_start += seg.length;
    Rat mq = -seg.slope;
    if (mq.get_den() != 1) continue;  // roots live in a ramified extension
    long m = mpz_get_si(mq.get_num().get_mpz_t());

    // Substitute x = p^m y, divide by the minimal power of p; the
    // transformed polynomial is p-integral and has a simple nonzero root
    // mod p corresponding to this segment.
    long mu = kValInf;
    std::vector<long> vals(d.size(), kValInf);
    for (size_t i = 0; i < d.size(); ++i) {
      long v = valuation_rat(d[i], p);
      if (v == kValInf) continue;
      vals[i] = v + m * static_cast<long>(i);
      mu = std::min(mu, vals[i]);
    }
    long target = std::max<long>(1, abs_prec - m) + 1;
    Int modulus = pow_int(p, static_cast<unsigned long>(target));
    std::vector<Int> g(d.size(), Int(0));
    for (size_t i = 0; i < d.size(); ++i) {
      if (vals[i] == kValInf) continue;
      Rat e = d[i] * pow_rat(p, m * static_cast<long>(i) - mu);
      g[i] = rat_mod(e, p, modulus);
    }
    std::vector<Int> gp(d.size() > 1 ? d.size() - 1 : 0);
    for (size_t i = 1; i < d.size(); ++i) gp[i - 1] = mod_reduce(g[i] * Int(static_cast<long>(i)), modulus);

    // Simple nonzero residue roots mod p; each Hensel-lifts to a root in
    // Q_p.  A length-1 segment carries exactly one, and it is simple.
    Int pm(p);
    long found = 0;
    for (long z0 = 1; z0 < p; ++z0) {
      if (eval_mod(g, Int(z0), pm) != 0) continue;
      if (eval_mod(gp, Int(z0), pm) == 0) {
        if (seg.length == 1)
          fail(ErrorCode::NonIsolatedRoot,
               "residue root not simple on a length-1 segment");
        continue;  // multiple residue root; not isolated in Q_p
      }
      ++found;
      // Newton iteration with doubling modulus; quadratic convergence is
      // certified by the simple-root condition.
      Int z(z0);
      long prec = 1;
      while (prec < target) {
        prec = std::min(2 * prec, target);
        Int mk = pow_int(p, static_cast<unsigned long>(prec));
        Int fz = eval_mod(g, z, mk);
        Int fpz = eval_mod(gp, z, mk);
        Int inv = mod_inverse(fpz, mk);
        z = mod_reduce(z - fz * inv, mk);
      }
      rep.roots.push_back(PadicScalar::from_parts(p, m, z, target));
    }
    if (seg.length == 1 && found != 1)
      fail(ErrorCode::NonIsolatedRoot,
           "no residue root found for a length-1 integer-slope segment");
  }
  return rep;
}

}  // namespace uop
