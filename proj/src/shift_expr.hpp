#ifndef ERGOLAB_SHIFT_EXPR_HPP
#define ERGOLAB_SHIFT_EXPR_HPP

// Expression trees of shifted/complemented copies of a base set E under
// union and intersection. Atom(h, false) denotes E - h = {n : n + h in E};
// Atom(h, true) its complement (always window-relative).

#include <memory>
#include <string>
#include <vector>

#include "interval_set.hpp"
#include "lazy_set.hpp"

namespace ergo {

struct ShiftExpr;
using ShiftExprPtr = std::shared_ptr<const ShiftExpr>;

struct ShiftExpr {
  enum class Kind { Atom, Union, Intersect };
  Kind kind = Kind::Atom;
  i64 shift = 0;
  bool complemented = false;
  ShiftExprPtr left, right;

  static ShiftExprPtr atom(i64 h, bool comp = false);
  static ShiftExprPtr unite(ShiftExprPtr l, ShiftExprPtr r);
  static ShiftExprPtr intersect(ShiftExprPtr l, ShiftExprPtr r);
};

i64 max_abs_shift(const ShiftExpr& e);
std::vector<i64> distinct_shifts(const ShiftExpr& e);  // sorted unique
std::string format_expr(const ShiftExpr& e);

// Grammar: E | E@h | ~expr | (expr & expr) | (expr | expr).
// Complements of composite subtrees are normalized to atoms via De Morgan.
ShiftExprPtr parse_expr(const std::string& text);

// Evaluates the tree against a base set already materialized on a window
// covering [w.lo - maxAbsShift, w.hi + maxAbsShift).
WindowSet eval_expr_on(const ShiftExpr& e, const WindowSet& base, Window w);

// Restricts E once to the padded window, then evaluates.
WindowSet eval_expr(const ShiftExpr& e, const LazySet& E, Window w);

// Truth of the tree under an assignment "n + h in E" == bits[shift index],
// with shifts as returned by distinct_shifts. Used by the cylinder route.
bool eval_expr_word(const ShiftExpr& e, const std::vector<i64>& shifts,
                    const std::vector<bool>& bits);

}  // namespace ergo

#endif
