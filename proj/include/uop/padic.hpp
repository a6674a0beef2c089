#ifndef UOP_PADIC_HPP
#define UOP_PADIC_HPP

#include <string>
#include <vector>

#include "uop/numutil.hpp"

namespace uop {

// Capped-precision element of Q_p.
//
// A nonzero element is stored as p^val * unit with unit a residue mod
// p^rel that is prime to p; the value is known to absolute precision
// val + rel.  Two degenerate states exist: the exact zero (valuation
// +infinity), and the inexact zero O(p^N), which carries only the bound
// N on its absolute precision.
class PadicScalar {
 public:
  static PadicScalar exact_zero(long p);
  static PadicScalar inexact_zero(long p, long abs_prec);
  static PadicScalar from_integer(const Int& x, long p, long relprec);
  static PadicScalar from_rational(const Rat& x, long p, long relprec);
  // Value p^val * unit with unit given mod p^relprec (unit prime to p).
  static PadicScalar from_parts(long p, long val, const Int& unit, long relprec);

  long prime() const { return p_; }
  bool is_exact_zero() const { return state_ == State::ExactZero; }
  bool is_inexact_zero() const { return state_ == State::InexactZero; }
  // Zero as far as the stored precision can tell.
  bool is_zero() const { return state_ != State::Nonzero; }

  // kValInf for the exact zero; for an inexact zero the valuation is only
  // bounded below by the precision, and that bound is returned.
  long valuation() const;
  long relprec() const { return rel_; }
  // Absolute precision: val + rel for nonzero, the O(p^N) bound for an
  // inexact zero, kValInf for the exact zero.
  long abs_prec() const;
  const Int& unit() const { return unit_; }

  // Canonical integer lift p^val * unit (valuation must be >= 0).
  Int lift() const;
  // unit mod p^k (k <= rel).
  Int unit_mod(long k) const;

  PadicScalar operator-() const;
  friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b);
  PadicScalar& operator+=(const PadicScalar& o) { return *this = *this + o; }
  PadicScalar& operator-=(const PadicScalar& o) { return *this = *this - o; }
  PadicScalar& operator*=(const PadicScalar& o) { return *this = *this * o; }
  PadicScalar& operator/=(const PadicScalar& o) { return *this = *this / o; }

  // True when the two values agree modulo p^abs.
  bool congruent(const PadicScalar& o, long abs) const;

  // Renders as "p^a*b" (b a positive residue mod p^render_rel), "b" when
  // a == 0, or "0 + O(p^N)" for zeros.
  std::string str(long render_rel = 10) const;

 private:
  enum class State { Nonzero, ExactZero, InexactZero };
  PadicScalar(long p, State st, long val, Int unit, long rel)
      : p_(p), state_(st), val_(val), unit_(std::move(unit)), rel_(rel) {}
  void normalize();

  long p_ = 2;
  State state_ = State::ExactZero;
  long val_ = 0;  // valuation; for InexactZero, the O(p^val_) bound
  Int unit_ = 0;
  long rel_ = 0;
};

struct NewtonSegment {
  Rat slope;
  long length = 0;
};

struct NewtonPoint {
  long degree = 0;
  Rat valuation;   // meaningful when !infinite
  bool infinite = false;
};

// Lower convex hull of (degree, valuation) points; slopes strictly
// increase across segments.
struct NewtonPolygon {
  std::vector<std::pair<long, Rat>> vertices;
  std::vector<NewtonSegment> segments;

  // Segment slopes expanded by multiplicity, in increasing order.
  std::vector<Rat> slope_list() const;
};

long valuation_of_rational(const Rat& x, long p);

NewtonPolygon newton_polygon(const std::vector<NewtonPoint>& points);

struct PadicRootReport {
  std::vector<PadicScalar> roots;  // one per length-1 integer-slope segment
  // Root valuation and multiplicity for every segment, qualifying or not.
  std::vector<std::pair<Rat, long>> root_valuations;
  long zero_multiplicity = 0;  // multiplicity of the root 0
};

// Roots in Q_p of a rational polynomial (coeffs[i] = coefficient of x^i),
// one per Newton-polygon segment of length 1 with integer slope, each to
// absolute precision >= abs_prec.  Other segments are reported by
// valuation only.
PadicRootReport padic_roots(const std::vector<Rat>& coeffs, long p,
                            long abs_prec);

}  // namespace uop

#endif
