#ifndef UOP_UMATRIX_HPP
#define UOP_UMATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "uop/hauptmodul.hpp"
#include "uop/numutil.hpp"

namespace uop {

// Exact rational n x n truncation of the U operator in the f_p-power
// basis: entry(i, j) (1-based) is the coefficient of f_p^i in U(f_p^j),
// at disc radius radius() (r = 0 unless rescaled).
class UMatrix {
 public:
  UMatrix() = default;
  UMatrix(long p, long n, Rat radius, long qprec_used)
      : p_(p), n_(n), radius_(std::move(radius)), qprec_(qprec_used),
        e_(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(0))) {}

  long prime() const { return p_; }
  long size() const { return n_; }
  const Rat& radius() const { return radius_; }
  long qprec_used() const { return qprec_; }

  const Rat& entry(long i, long j) const {
    return e_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  }
  Rat& entry(long i, long j) {
    return e_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  }

  bool operator==(const UMatrix& o) const {
    return p_ == o.p_ && n_ == o.n_ && radius_ == o.radius_ && e_ == o.e_;
  }

 private:
  long p_ = 0;
  long n_ = 0;
  Rat radius_;
  long qprec_ = 0;
  std::vector<std::vector<Rat>> e_;
};

// Direct q-expansion solve at r = 0 (q-precision p*n + 1).
UMatrix u_direct(long p, long n);

// Fill entries with i, j > p from the recurrence; entries with i <= p or
// j <= p are taken from `base` (which must cover size n).
UMatrix u_recurrence(long p, long n, const RecurrenceKernel& M,
                     const UMatrix& base);

// Entrywise u^(r)_{ij} = c^{j-i} u^(0)_{ij} with c = p^{12r/(p-1)};
// 12r/(p-1) must be a nonnegative integer.
UMatrix rescale(const UMatrix& U0, const Rat& r);

// Scaling constant exponent 12r/(p-1); throws IrrationalScale when not a
// nonnegative integer.
long rescale_exponent(long p, const Rat& r);

struct SymmetryReport {
  bool pass = true;
  long bad_i = 0, bad_j = 0;
};

// Verifies i * p^{12j/(p-1)} * u_ij = j * p^{12i/(p-1)} * u_ji exactly for
// all i, j <= n (U0 at r = 0).
SymmetryReport symmetry_check(const UMatrix& U0, long n);

// Versioned JSON cache; `dir` empty means $UOP_CACHE_DIR.
std::string cache_file_name(long p, long n, const Rat& r);
void save_matrix(const UMatrix& U, const std::string& path);
UMatrix load_matrix(const std::string& path);
// Returns the cached matrix if present, else computes u_direct and saves
// (when a cache directory is configured).
UMatrix u_direct_cached(long p, long n, const std::string& dir);

}  // namespace uop

#endif
