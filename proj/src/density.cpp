#include "density.hpp"

#include <stdexcept>

#include "parallel.hpp"

namespace ergo {

UpperDensityScan upper_density_along(const ShiftExpr& expr, const LazySet& E,
                                     const FolnerFamily& fam, int Nmax) {
  if (Nmax < 1) throw std::out_of_range("Nmax must be >= 1");
  int N0 = fam.name() == "dyadic" ? 0 : 1;
  UpperDensityScan scan;
  scan.running_max = Rational(0);
  for (int N = N0; N <= Nmax; ++N) {
    Window w = fam.window(N);
    Rational v = density(eval_expr(expr, E, w));
    if (v > scan.running_max) scan.running_max = v;
    scan.terms.push_back({N, v});
  }
  return scan;
}

BanachBound banach_lower_bound(const ShiftExpr& expr, const LazySet& E, i64 L,
                               i64 B, i64 stride) {
  if (L < 1 || stride < 1 || B < L)
    throw std::out_of_range("banach scan requires L >= 1, stride >= 1, B >= L");
  // Complement and intersection are pointwise, so evaluating once over the
  // whole scan range and counting per sub-window matches per-window evaluation.
  WindowSet full = eval_expr(expr, E, {0, B});
  PrefixCounter prefix(full);
  i64 nwin = (B - L) / stride + 1;
  std::vector<i64> counts(static_cast<std::size_t>(nwin));
  parallel_for(static_cast<std::size_t>(nwin), [&](std::size_t i) {
    i64 s = static_cast<i64>(i) * stride;
    counts[i] = prefix.count_in(s, s + L);
  });
  i64 best = -1, best_start = 0;
  for (i64 i = 0; i < nwin; ++i) {
    if (counts[static_cast<std::size_t>(i)] > best) {
      best = counts[static_cast<std::size_t>(i)];
      best_start = i * stride;
    }
  }
  return {Rational(best, L), Window{best_start, best_start + L}};
}

}  // namespace ergo
