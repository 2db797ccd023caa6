#include "selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "constructions.hpp"
#include "correspondence.hpp"
#include "density.hpp"
#include "experiments.hpp"
#include "folner.hpp"
#include "parallel.hpp"
#include "sequences.hpp"
#include "weyl.hpp"

namespace ergo {

WindowSet random_window_set(std::mt19937_64& rng, Window w, int max_pieces) {
  std::uniform_int_distribution<int> npieces(0, max_pieces);
  std::uniform_int_distribution<i64> point(w.lo, w.hi - 1);
  std::uniform_int_distribution<i64> len(1, std::max<i64>(1, w.length() / 8));
  std::vector<Interval> ivs;
  int n = npieces(rng);
  for (int i = 0; i < n; ++i) {
    i64 lo = point(rng);
    ivs.push_back({lo, std::min(w.hi, lo + len(rng))});
  }
  return WindowSet(w, std::move(ivs));
}

ShiftExprPtr random_shift_expr(std::mt19937_64& rng, int max_depth, i64 max_shift) {
  std::uniform_int_distribution<i64> shift(-max_shift, max_shift);
  std::uniform_int_distribution<int> coin(0, 99);
  if (max_depth <= 0 || coin(rng) < 40)
    return ShiftExpr::atom(shift(rng), coin(rng) < 30);
  ShiftExprPtr l = random_shift_expr(rng, max_depth - 1, max_shift);
  ShiftExprPtr r = random_shift_expr(rng, max_depth - 1, max_shift);
  return coin(rng) < 50 ? ShiftExpr::unite(l, r) : ShiftExpr::intersect(l, r);
}

WindowSet eval_expr_naive(const ShiftExpr& e, const WindowSet& base, Window w) {
  std::function<bool(const ShiftExpr&, i64)> holds = [&](const ShiftExpr& x, i64 n) {
    switch (x.kind) {
      case ShiftExpr::Kind::Atom:
        return base.contains(n + x.shift) != x.complemented;
      case ShiftExpr::Kind::Union:
        return holds(*x.left, n) || holds(*x.right, n);
      case ShiftExpr::Kind::Intersect:
        return holds(*x.left, n) && holds(*x.right, n);
    }
    return false;
  };
  std::vector<Interval> ivs;
  for (i64 n = w.lo; n < w.hi; ++n)
    if (holds(e, n)) ivs.push_back({n, n + 1});
  return WindowSet(w, std::move(ivs));
}

namespace {

struct Suite {
  std::ostringstream out;
  int checks = 0, failures = 0;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    ++checks;
    if (ok) {
      out << "ok " << name;
      if (!detail.empty()) out << " (" << detail << ")";
    } else {
      ++failures;
      out << "FAIL " << name;
      if (!detail.empty()) out << ": " << detail;
    }
    out << "\n";
  }
};

void check_interval_algebra(Suite& s, std::mt19937_64& rng) {
  int bad = 0;
  for (int t = 0; t < 200; ++t) {
    Window w{-64, 192};
    WindowSet a = random_window_set(rng, w, 8);
    WindowSet b = random_window_set(rng, w, 8);
    WindowSet u = set_union(a, b), x = set_intersect(a, b);
    if (u.count() + x.count() != a.count() + b.count()) ++bad;
    if (!(set_complement(u).serialize() ==
          set_intersect(set_complement(a), set_complement(b)).serialize()))
      ++bad;
    if (set_complement(set_complement(a)).serialize() != a.serialize()) ++bad;
    if (WindowSet::parse(a.serialize()).serialize() != a.serialize()) ++bad;
  }
  s.check("interval-algebra", bad == 0, "200 random pairs");
}

void check_shift_composition(Suite& s, std::mt19937_64& rng) {
  int bad = 0;
  std::uniform_int_distribution<i64> shift(-10, 10);
  for (int t = 0; t < 100; ++t) {
    Window big{-128, 256};
    WindowSet a = random_window_set(rng, big, 8);
    i64 h1 = shift(rng), h2 = shift(rng);
    Window w{0, 64};
    Window mid{w.lo + h2 - 24, w.hi + h2 + 24};
    WindowSet two = shift_restrict(shift_restrict(a, h1, mid), h2, w);
    WindowSet one = shift_restrict(a, h1 + h2, w);
    if (two.serialize() != one.serialize()) ++bad;
  }
  s.check("shift-composition", bad == 0, "100 random compositions");
}

void check_expr_routes(Suite& s, std::mt19937_64& rng) {
  int bad = 0;
  for (int t = 0; t < 100; ++t) {
    Window w{0, 256};
    Window padded{w.lo - 20, w.hi + 20};
    WindowSet base = random_window_set(rng, padded, 10);
    LazySetPtr E = explicit_intervals(base.intervals().empty()
                                          ? std::vector<Interval>{{-1000, -999}}
                                          : base.intervals());
    ShiftExprPtr expr = random_shift_expr(rng, 4, 16);
    WindowSet fast = eval_expr(*expr, *E, w);
    WindowSet slow = eval_expr_naive(*expr, restrict_to(*E, {w.lo - 16, w.hi + 16}), w);
    if (fast.serialize() != slow.serialize()) ++bad;
    if (expr_via_cylinders(*E, *expr, w) != density(fast)) ++bad;
  }
  s.check("expr-dual-route", bad == 0, "100 random expressions, 3 evaluators");
}

void check_word_total(Suite& s, std::mt19937_64& rng) {
  int bad = 0;
  std::uniform_int_distribution<int> klen(1, 8);
  std::uniform_int_distribution<i64> shift(-12, 12);
  for (int t = 0; t < 40; ++t) {
    Window w{0, 512};
    WindowSet base = random_window_set(rng, {w.lo - 16, w.hi + 16}, 12);
    LazySetPtr E = explicit_intervals(base.intervals().empty()
                                          ? std::vector<Interval>{{-1000, -999}}
                                          : base.intervals());
    std::set<i64> uniq;
    int k = klen(rng);
    while (static_cast<int>(uniq.size()) < k) uniq.insert(shift(rng));
    std::vector<i64> shifts(uniq.begin(), uniq.end());
    Rational total(0);
    for (std::uint64_t word = 0; word < (1ull << k); ++word) {
      std::vector<bool> bits(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) bits[static_cast<std::size_t>(i)] = (word >> i) & 1u;
      total = total + cylinder_frequency(*E, CylinderSpec(shifts, bits), w);
    }
    if (total != Rational(1)) ++bad;
  }
  s.check("cylinder-word-total", bad == 0, "40 shift tuples, k <= 8");
}

void check_cylinder_shift_invariance(Suite& s, std::mt19937_64& rng) {
  int bad = 0;
  std::uniform_int_distribution<i64> sdist(-20, 20);
  for (int t = 0; t < 40; ++t) {
    Window w{0, 1024};
    WindowSet base = random_window_set(rng, {-64, 1088}, 14);
    LazySetPtr E = explicit_intervals(base.intervals().empty()
                                          ? std::vector<Interval>{{-1000, -999}}
                                          : base.intervals());
    std::vector<i64> shifts{0, 3, 7};
    std::vector<bool> word{true, false, true};
    i64 sh = sdist(rng);
    std::vector<i64> moved{0 + sh, 3 + sh, 7 + sh};
    Rational f0 = cylinder_frequency(*E, CylinderSpec(shifts, word), w);
    Rational f1 = cylinder_frequency(*E, CylinderSpec(moved, word), w);
    Rational gap = f0 - f1;
    if (gap < Rational(0)) gap = Rational(0) - gap;
    i64 spread = 7;
    if (gap > Rational((sh < 0 ? -sh : sh) + spread, w.length())) ++bad;
  }
  s.check("cylinder-shift-invariance", bad == 0, "40 shifted specs, exact bound");
}

void check_folner_defect(Suite& s) {
  FolnerFamily seg = FolnerFamily::initial_segments();
  FolnerFamily dy = FolnerFamily::dyadic_even();
  bool ok = true;
  for (int N = 1; N <= 12; ++N) {
    i64 L = seg.window(N).length();
    for (i64 g : {i64(1), i64(3), i64(100)})
      if (seg.defect(N, g) != Rational(std::min(2 * g, 2 * L), L)) ok = false;
  }
  for (int N = 0; N <= 8; ++N) {
    i64 L = dy.window(N).length();
    if (dy.defect(N, 5) != Rational(std::min<i64>(10, 2 * L), L)) ok = false;
  }
  s.check("folner-defect", ok, "interval formula, segments and dyadic");
}

void check_block_density(Suite& s) {
  LazySetPtr E = hindman_set();
  FolnerFamily dy = FolnerFamily::dyadic_even();
  ShiftExprPtr e = ShiftExpr::atom(0);
  UpperDensityScan scan = upper_density_along(*e, *E, dy, 8);
  bool ok = true;
  for (const DensityTerm& t : scan.terms) {
    // count of blocks 4^k..2*4^k below 2^{2N+1} is (4^{N+1}-1)/3
    i128 num = ((i128(1) << (2 * (t.N + 1))) - 1) / 3;
    if (t.value != Rational(num, i128(1) << (2 * t.N + 1))) ok = false;
  }
  s.check("block-density-closed-form", ok, "dyadic windows N <= 8");
}

void check_periodic_cover(Suite& s) {
  LazySetPtr E = periodic_set(5, {0});
  std::vector<i64> Ks{1, 2, 3, 4, 5};
  CoveringReport rep =
      covering_curve(*E, IntSequence::identity(), Ks, 1000, 8000, 500);
  bool ok = true;
  Rational prev(0);
  for (std::size_t i = 0; i < rep.points.size(); ++i) {
    if (rep.points[i].best < prev) ok = false;
    prev = rep.points[i].best;
    if (rep.points[i].best != Rational(static_cast<i64>(i) + 1, 5)) ok = false;
  }
  s.check("periodic-cover-closed-form", ok, "mod 5, hits 1 at K=5");
}

void check_correlation_bound(Suite& s) {
  bool ok = true;
  Window w{0, 100000};
  i64 H = 200;
  for (LazySetPtr E : {periodic_set(2, {0}), periodic_set(7, {1, 4}), hindman_set()}) {
    CorrelationAverages c = averaged_correlation(*E, w, H);
    Rational slack(H, w.length());
    for (const Rational& p : c.partial)
      if (p < c.reference - slack) ok = false;
  }
  // evens: correlation alternates d, 0, so every even-length prefix averages d/2
  CorrelationAverages ev = averaged_correlation(*periodic_set(2, {0}), w, H);
  if (ev.partial.back() != Rational(1, 4)) ok = false;
  s.check("correlation-liminf-bound", ok, "3 sets, every prefix");
}

void check_stability_rows(Suite& s) {
  bool ok = true;
  for (const StabilityRow& row : hindman_counterexample(8, {0, 1, 5}))
    if (!row.within) ok = false;
  s.check("union-stability-bound", ok, "K in {0,1,5}, N <= 8");
}

void check_dd(Suite& s, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> xs(0.1, 50.0);
  int bad = 0;
  for (int t = 0; t < 200; ++t) {
    double x = xs(rng);
    DD r = dd_exp(dd_log(DD(x)));
    if (std::fabs(r.to_double() - x) > 1e-13 * x) ++bad;
    DD q = dd_mul(dd_sqrt(DD(x)), dd_sqrt(DD(x)));
    if (std::fabs(q.to_double() - x) > 1e-14 * x) ++bad;
  }
  if (dd_parse("0.5").to_double() != 0.5) ++bad;
  double g = dd_golden().to_double();
  if (std::fabs(g * g + g - 1.0) > 1e-15) ++bad;
  s.check("double-double", bad == 0, "exp/log/sqrt roundtrips");
}

void check_sequences(Suite& s) {
  bool ok = true;
  IntSequence sq = IntSequence::parse("pow b=1 c=1.5");
  if (sq.eval(4) != 8) ok = false;  // 4^1.5
  if (IntSequence::floor_log().eval(3) != 1) ok = false;
  if (IntSequence::poly_plus_log().eval(3) != 10) ok = false;  // 9 + log 3
  std::vector<i64> pr = IntSequence::prime_power(DD(0.5)).values_up_to(5);
  if (pr != std::vector<i64>{1, 1, 2, 2, 3}) ok = false;  // floor(sqrt p)
  s.check("sequence-evaluators", ok, "pow/log/poly2log/prime spot values");
}

void check_weyl_rational(Suite& s) {
  // k_n = n at x = 1/2: terms alternate -1, +1, so the odd-length sum is -1
  double m = weyl_sum_magnitude(IntSequence::identity(), 999, 0.5);
  s.check("weyl-rational-point", std::fabs(m - 1.0 / 999.0) < 1e-12,
          "identity at x=1/2");
}

void check_determinism_slots(Suite& s) {
  // the same banach scan twice; parallel slot assembly must agree exactly
  LazySetPtr E = hindman_set();
  ShiftExprPtr e = parse_expr("(E | E@1)");
  BanachBound a = banach_lower_bound(*e, *E, 512, 32768, 64);
  BanachBound b = banach_lower_bound(*e, *E, 512, 32768, 64);
  s.check("scan-repeatability", a.value == b.value && a.witness == b.witness,
          "identical witness windows");
}

}  // namespace

SelftestResult run_selftest(std::uint64_t seed) {
  Suite s;
  s.out << "selftest seed=" << seed << "\n";
  std::mt19937_64 rng(seed);
  check_interval_algebra(s, rng);
  check_shift_composition(s, rng);
  check_expr_routes(s, rng);
  check_word_total(s, rng);
  check_cylinder_shift_invariance(s, rng);
  check_folner_defect(s);
  check_block_density(s);
  check_periodic_cover(s);
  check_correlation_bound(s);
  check_stability_rows(s);
  check_dd(s, rng);
  check_sequences(s);
  check_weyl_rational(s);
  check_determinism_slots(s);
  s.out << "selftest: " << s.checks << " checks, " << s.failures << " failures\n";
  return {s.out.str(), s.checks, s.failures};
}

}  // namespace ergo
