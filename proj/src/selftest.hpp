#ifndef ERGOLAB_SELFTEST_HPP
#define ERGOLAB_SELFTEST_HPP

// Seeded property suite over every module invariant. The report string is a
// pure function of the seed: parallel work only fills pre-sized slots, so the
// bytes match across thread counts.

#include <random>
#include <string>

#include "interval_set.hpp"
#include "shift_expr.hpp"

namespace ergo {

struct SelftestResult {
  std::string report;
  int checks = 0;
  int failures = 0;
};

SelftestResult run_selftest(std::uint64_t seed);

// Shared randomized generators (also used by the test suite).
WindowSet random_window_set(std::mt19937_64& rng, Window w, int max_pieces);
ShiftExprPtr random_shift_expr(std::mt19937_64& rng, int max_depth, i64 max_shift);

// Direct per-point evaluation of an expression against a materialized base;
// the slow oracle for the interval-algebra route.
WindowSet eval_expr_naive(const ShiftExpr& e, const WindowSet& base, Window w);

}  // namespace ergo

#endif
