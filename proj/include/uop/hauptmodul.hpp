#ifndef UOP_HAUPTMODUL_HPP
#define UOP_HAUPTMODUL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uop/numutil.hpp"
#include "uop/qseries.hpp"

namespace uop {

// Integer bivariate polynomial, coefficient of x^a y^b keyed by (a, b).
class BivarIntPoly {
 public:
  using Key = std::pair<long, long>;

  Int coeff(long a, long b) const;
  void set(long a, long b, const Int& c);
  const std::map<Key, Int>& terms() const { return terms_; }
  long total_degree() const;
  long max_degree_x() const;
  long max_degree_y() const;

  // Sorted "(a,b): coefficient" lines.
  std::string dump() const;

 private:
  std::map<Key, Int> terms_;
};

// The p x p recurrence kernel M with M_{ab} = coefficient of x^a y^b in
// -I_p; skew upper triangular (M_{ab} = 0 for a + b > p + 1).
struct RecurrenceKernel {
  long p = 0;
  std::vector<std::vector<Int>> M;  // M[a-1][b-1], 1-based indices a, b

  const Int& at(long a, long b) const { return M[a - 1][b - 1]; }
};

// The unique degree-(p+1) integer polynomial H_p with j * f_p = H_p(f_p);
// returned as coefficients [h_0, ..., h_{p+1}], h_0 = 1.
std::vector<Int> compute_Hp(long p, long T_hint);

// The two-variable integer relation I_p with I_p(V(f_p), 1/f_p) = 0:
// total degree p+1, degree <= p in each variable, constant coefficient 1,
// linear terms zero.
BivarIntPoly derive_Ip(long p, const std::vector<Int>& Hp);

RecurrenceKernel recurrence_kernel(const BivarIntPoly& Ip);

class UMatrix;  // uop/umatrix.hpp

struct RatGenReport {
  int sign = 0;  // +1 or -1: the s with sum u_ij x^i y^j = s*(y/p) d/dy log I_p
  bool pass = false;
  long checked_through = 0;
};

// Expands s*(y/p)*d/dy log I_p(x,y) for s = +1, -1 and reports which sign
// reproduces the U-matrix entries u_{ij} for 1 <= i, j <= n.
RatGenReport rational_generation_check(const BivarIntPoly& Ip,
                                       const UMatrix& U0, long n);

}  // namespace uop

#endif
