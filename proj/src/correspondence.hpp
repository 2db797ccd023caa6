#ifndef ERGOLAB_CORRESPONDENCE_HPP
#define ERGOLAB_CORRESPONDENCE_HPP

// Empirical cylinder frequencies of the orbit of the indicator of a set, and
// the exact agreement between cylinder sums and star-expression densities.
// Everything here is window arithmetic over exact rationals.

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "density.hpp"
#include "folner.hpp"
#include "interval_set.hpp"
#include "lazy_set.hpp"
#include "rational.hpp"
#include "shift_expr.hpp"

namespace ergo {

// Prescribes membership bits at finitely many shifts: n matches when
// 1_E(n + shifts[i]) == word[i] for every i.
struct CylinderSpec {
  std::vector<i64> shifts;  // strictly increasing
  std::vector<bool> word;   // same length

  CylinderSpec() = default;
  CylinderSpec(std::vector<i64> s, std::vector<bool> w);
  std::string key() const;  // canonical memo key, e.g. "0:1,3:0"
};

Rational cylinder_frequency(const LazySet& E, const CylinderSpec& spec, Window w);

// Memoized cylinder frequencies of one set on one window. Single writer until
// freeze(); afterwards lookups are lock-free and insertion is an error.
class EmpiricalMeasure {
 public:
  EmpiricalMeasure(LazySetPtr source, Window w);

  Rational frequency(const CylinderSpec& spec);
  void freeze() { frozen_ = true; }
  Rational frequency_frozen(const CylinderSpec& spec) const;  // must be memoized
  Window window() const { return window_; }

 private:
  LazySetPtr source_;
  Window window_;
  bool frozen_ = false;
  std::mutex mu_;
  std::map<std::string, Rational> memo_;
};

// Evaluates the expression's window density by enumerating the words (over its
// distinct shifts) that satisfy the boolean tree and summing their cylinder
// frequencies. Agrees with density(eval_expr(...)) as an exact rational.
// Rejects expressions with more than 20 distinct shifts.
Rational expr_via_cylinders(const LazySet& E, const ShiftExpr& expr, Window w);

struct CorrespondenceRow {
  std::string expr_id;
  int N = 0;
  Rational value;
  bool monotone_gap = false;  // running max at final N beats this row by > eps
};

struct CorrespondenceTable {
  std::vector<CorrespondenceRow> rows;  // grouped by expr, N increasing
};

CorrespondenceTable correspondence_table(const LazySet& E,
                                         const std::vector<ShiftExprPtr>& exprs,
                                         const FolnerFamily& fam, int Nmax,
                                         double eps = 0.05);

struct CorrelationAverages {
  std::vector<Rational> partial;  // partial[h-1] = (1/h) sum_{g<h} dens(E cap E-g)
  Rational reference;             // density(E on the window) squared
};

// Fixed-window correlation averages over consecutive shifts g = 0..H-1.
CorrelationAverages averaged_correlation(const LazySet& E, Window w, i64 H);

}  // namespace ergo

#endif
