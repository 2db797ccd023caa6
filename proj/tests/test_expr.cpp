#include <doctest.h>

#include <random>

#include "lazy_set.hpp"
#include "selftest.hpp"
#include "shift_expr.hpp"

using namespace ergo;

TEST_CASE("parse and format the expression grammar") {
  CHECK(format_expr(*parse_expr("E")) == "E");
  CHECK(format_expr(*parse_expr("E@3")) == "E@3");
  CHECK(format_expr(*parse_expr("E@-4")) == "E@-4");
  CHECK(format_expr(*parse_expr("~E")) == "~E");
  CHECK(format_expr(*parse_expr("(E | E@1)")) == "(E | E@1)");
  CHECK(format_expr(*parse_expr("(E & ~E@2)")) == "(E & ~E@2)");
  CHECK(format_expr(*parse_expr("((E@1 | ~E@2) & E@3)")) == "((E@1 | ~E@2) & E@3)");
}

TEST_CASE("complement of a composite pushes down by De Morgan") {
  CHECK(format_expr(*parse_expr("~(E | E@2)")) == "(~E & ~E@2)");
  CHECK(format_expr(*parse_expr("~(E & E@2)")) == "(~E | ~E@2)");
  CHECK(format_expr(*parse_expr("~~E")) == "E");
  CHECK(format_expr(*parse_expr("~(~E | E@1)")) == "(E & ~E@1)");
}

TEST_CASE("parse failures carry positions") {
  CHECK_THROWS_AS(parse_expr(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_expr("E@"), std::invalid_argument);
  CHECK_THROWS_AS(parse_expr("(E | E@1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_expr("(E % E)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_expr("F"), std::invalid_argument);
  CHECK_THROWS_AS(parse_expr("E E"), std::invalid_argument);
}

TEST_CASE("shift bookkeeping") {
  ShiftExprPtr e = parse_expr("((E@-5 | ~E@2) & (E@2 | E))");
  CHECK(max_abs_shift(*e) == 5);
  CHECK(distinct_shifts(*e) == std::vector<i64>{-5, 0, 2});
}

TEST_CASE("evaluation semantics of atoms, shifts and complements") {
  // E - h on the window: n qualifies when n + h lies in E
  LazySetPtr E = explicit_intervals({{4, 8}});
  Window w{0, 12};
  CHECK(eval_expr(*parse_expr("E"), *E, w).serialize() ==
        "window=[0,12) intervals=[4,8)");
  CHECK(eval_expr(*parse_expr("E@2"), *E, w).serialize() ==
        "window=[0,12) intervals=[2,6)");
  CHECK(eval_expr(*parse_expr("~E"), *E, w).serialize() ==
        "window=[0,12) intervals=[0,4)[8,12)");
  CHECK(eval_expr(*parse_expr("(E | E@2)"), *E, w).serialize() ==
        "window=[0,12) intervals=[2,8)");
  CHECK(eval_expr(*parse_expr("(E & E@2)"), *E, w).serialize() ==
        "window=[0,12) intervals=[4,6)");
}

TEST_CASE("interval route matches pointwise evaluation on random data") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    Window w{0, 128};
    Window padded{w.lo - 20, w.hi + 20};
    WindowSet base = random_window_set(rng, padded, 8);
    LazySetPtr E = explicit_intervals(base.intervals().empty()
                                          ? std::vector<Interval>{{-999, -998}}
                                          : base.intervals());
    ShiftExprPtr expr = random_shift_expr(rng, 5, 16);
    WindowSet fast = eval_expr(*expr, *E, w);
    WindowSet slow = eval_expr_naive(*expr, restrict_to(*E, {w.lo - 16, w.hi + 16}), w);
    REQUIRE(fast.serialize() == slow.serialize());
  }
}

TEST_CASE("word evaluation agrees with pointwise truth") {
  ShiftExprPtr e = parse_expr("((E | ~E@2) & E@5)");
  std::vector<i64> shifts = distinct_shifts(*e);
  REQUIRE(shifts == std::vector<i64>{0, 2, 5});
  for (unsigned m = 0; m < 8; ++m) {
    std::vector<bool> bits{(m & 1u) != 0, (m & 2u) != 0, (m & 4u) != 0};
    bool expect = (bits[0] || !bits[1]) && bits[2];
    CHECK(eval_expr_word(*e, shifts, bits) == expect);
  }
}
