#ifndef ERGOLAB_DENSITY_HPP
#define ERGOLAB_DENSITY_HPP

// The density engine: window densities along Folner families and certified
// lower bounds for upper Banach density via window scans.

#include <vector>

#include "folner.hpp"
#include "interval_set.hpp"
#include "lazy_set.hpp"
#include "rational.hpp"
#include "shift_expr.hpp"

namespace ergo {

struct DensityTerm {
  int N = 0;
  Rational value;
};

struct UpperDensityScan {
  std::vector<DensityTerm> terms;
  Rational running_max;  // finite limsup surrogate
};

UpperDensityScan upper_density_along(const ShiftExpr& expr, const LazySet& E,
                                     const FolnerFamily& fam, int Nmax);

struct BanachBound {
  Rational value;
  Window witness{0, 1};
};

// max over windows [s, s+L), s in {0, stride, 2*stride, ...}, s+L <= B, of the
// exact density of expr(E); the first window attaining the max is the witness.
// A certified lower bound for d*.
BanachBound banach_lower_bound(const ShiftExpr& expr, const LazySet& E, i64 L,
                               i64 B, i64 stride);

}  // namespace ergo

#endif
