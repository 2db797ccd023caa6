#include <doctest.h>

#include <random>

#include "constructions.hpp"
#include "correspondence.hpp"
#include "selftest.hpp"

using namespace ergo;

TEST_CASE("cylinder specs validate and key canonically") {
  CHECK_THROWS_AS(CylinderSpec({0, 0}, {true, false}), std::invalid_argument);
  CHECK_THROWS_AS(CylinderSpec({1, 0}, {true, false}), std::invalid_argument);
  CHECK_THROWS_AS(CylinderSpec({0, 1}, {true}), std::invalid_argument);
  CHECK(CylinderSpec({-2, 5}, {true, false}).key() == "-2:1,5:0");
}

TEST_CASE("cylinder frequency on the even integers") {
  LazySetPtr evens = periodic_set(2, {0});
  Window w{0, 1000};
  // n in E, n+1 not in E: every even n
  CHECK(cylinder_frequency(*evens, CylinderSpec({0, 1}, {true, false}), w) ==
        Rational(1, 2));
  // n in E and n+1 in E never happens
  CHECK(cylinder_frequency(*evens, CylinderSpec({0, 1}, {true, true}), w) ==
        Rational(0));
  // the empty word is the whole window
  CHECK(cylinder_frequency(*evens, CylinderSpec({}, {}), w) == Rational(1));
}

TEST_CASE("cylinder frequency counts block exits of the block set") {
  // n in E, n+1 not in E happens exactly at block tops 2*4^k - 1
  LazySetPtr E = hindman_set();
  Window w{0, i64(1) << 21};
  Rational f = cylinder_frequency(*E, CylinderSpec({0, 1}, {true, false}), w);
  CHECK(f == Rational(11, i64(1) << 21));  // k = 0..10 fit below 2^21
}

TEST_CASE("word totals over all words of a fixed shift tuple sum to one") {
  std::mt19937_64 rng(77);
  LazySetPtr E = hindman_set();
  Window w{0, 4096};
  std::vector<i64> shifts{-3, 0, 2, 9};
  Rational total(0);
  for (unsigned m = 0; m < 16; ++m) {
    std::vector<bool> bits{(m & 1u) != 0, (m & 2u) != 0, (m & 4u) != 0,
                           (m & 8u) != 0};
    total = total + cylinder_frequency(*E, CylinderSpec(shifts, bits), w);
  }
  CHECK(total == Rational(1));
}

TEST_CASE("empirical measure memoizes and freezes") {
  EmpiricalMeasure mu(periodic_set(3, {0}), {0, 900});
  CylinderSpec spec({0}, {true});
  CHECK(mu.frequency(spec) == Rational(1, 3));
  CHECK_THROWS_AS(mu.frequency_frozen(spec), std::logic_error);  // not frozen yet
  mu.freeze();
  CHECK(mu.frequency_frozen(spec) == Rational(1, 3));
  CHECK_THROWS_AS(mu.frequency(CylinderSpec({1}, {true})), std::logic_error);
  CHECK_THROWS_AS(mu.frequency_frozen(CylinderSpec({1}, {true})), std::out_of_range);
}

TEST_CASE("expression density via cylinders equals the interval route") {
  std::mt19937_64 rng(78);
  for (int t = 0; t < 100; ++t) {
    Window w{0, 512};
    WindowSet base = random_window_set(rng, {w.lo - 20, w.hi + 20}, 10);
    LazySetPtr E = explicit_intervals(base.intervals().empty()
                                          ? std::vector<Interval>{{-900, -899}}
                                          : base.intervals());
    ShiftExprPtr expr = random_shift_expr(rng, 5, 16);
    CHECK(expr_via_cylinders(*E, *expr, w) == density(eval_expr(*expr, *E, w)));
  }
  // trivial identities
  LazySetPtr evens = periodic_set(2, {0});
  Window w{0, 100};
  CHECK(expr_via_cylinders(*evens, *parse_expr("E"), w) == Rational(1, 2));
  CHECK(expr_via_cylinders(*evens, *parse_expr("(E | ~E)"), w) == Rational(1));
}

TEST_CASE("expressions over more than twenty shifts are rejected") {
  ShiftExprPtr e = ShiftExpr::atom(0);
  for (i64 h = 1; h <= 20; ++h) e = ShiftExpr::unite(e, ShiftExpr::atom(h));
  LazySetPtr evens = periodic_set(2, {0});
  CHECK_THROWS_AS(expr_via_cylinders(*evens, *e, Window{0, 64}),
                  std::invalid_argument);
}

TEST_CASE("correspondence table values and flags") {
  LazySetPtr evens = periodic_set(2, {0});
  std::vector<ShiftExprPtr> exprs{parse_expr("(E & E@2)"), parse_expr("(E & E@1)")};
  CorrespondenceTable t =
      correspondence_table(*evens, exprs, FolnerFamily::initial_segments(), 6);
  REQUIRE(t.rows.size() == 12);
  for (const CorrespondenceRow& r : t.rows) {
    if (r.expr_id == "(E & E@2)") {
      // periodicity: exactly ceil(N/2) of N points qualify
      CHECK(r.value == Rational((r.N + 1) / 2, r.N));
    } else {
      CHECK(r.value == Rational(0));
      CHECK(!r.monotone_gap);
    }
  }
}

TEST_CASE("monotone gap flags mark early rows far below the final running max") {
  // explicit family: tiny dense window later, sparse start
  LazySetPtr E = explicit_intervals({{100, 200}});
  FolnerFamily fam = FolnerFamily::parse("explicit [0,100)[100,200)");
  CorrespondenceTable t = correspondence_table(*E, {parse_expr("E")}, fam, 2);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].value == Rational(0));
  CHECK(t.rows[0].monotone_gap);   // running max 1 exceeds 0 by > 0.05
  CHECK(!t.rows[1].monotone_gap);
}

TEST_CASE("averaged correlation on the evens: exact alternation") {
  CorrelationAverages c = averaged_correlation(*periodic_set(2, {0}), {0, 10000}, 10);
  REQUIRE(c.partial.size() == 10);
  CHECK(c.partial[0] == Rational(1, 2));   // g = 0 term is density(E)
  CHECK(c.partial[1] == Rational(1, 4));   // g = 1 contributes nothing
  CHECK(c.partial[9] == Rational(1, 4));  // five hits of 1/2 over ten shifts
  CHECK(c.reference == Rational(1, 4));
  CHECK_THROWS_AS(averaged_correlation(*periodic_set(2, {0}), {0, 100}, 0),
                  std::out_of_range);
}

TEST_CASE("averaged correlation respects the window-boundary lower bound") {
  Window w{0, 1 << 18};
  i64 H = 300;
  for (LazySetPtr E : {hindman_set(), periodic_set(5, {0, 2})}) {
    CorrelationAverages c = averaged_correlation(*E, w, H);
    Rational slack(H, w.length());
    for (const Rational& p : c.partial) CHECK(p >= c.reference - slack);
  }
}
