#include <doctest.h>

#include <cmath>

#include "constructions.hpp"
#include "lazy_set.hpp"

using namespace ergo;

TEST_CASE("set spec grammar") {
  CHECK(restrict_to(*parse_set("hindman"), {0, 32}).serialize() ==
        "window=[0,32) intervals=[1,2)[4,8)[16,32)");
  CHECK(density(restrict_to(*parse_set("all"), {-10, 10})) == Rational(1));
  CHECK(restrict_to(*parse_set("periodic m=4 r=1,2"), {0, 8}).serialize() ==
        "window=[0,8) intervals=[1,3)[5,7)");
  CHECK(restrict_to(*parse_set("intervals [2,5)[9,11)"), {0, 20}).serialize() ==
        "window=[0,20) intervals=[2,5)[9,11)");
  CHECK_THROWS_AS(parse_set("moebius"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("ab a=1/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("rot u=0 v=0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("intervals"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("periodic m=4 r="), std::invalid_argument);
}

TEST_CASE("angle shorthands") {
  CHECK(std::fabs(parse_angle("golden").to_double() - 0.6180339887498949) < 1e-15);
  CHECK(std::fabs(parse_angle("sqrt2").to_double() - 0.41421356237309515) < 1e-15);
  CHECK(std::fabs(parse_angle("sqrt3").to_double() - 0.7320508075688772) < 1e-15);
  CHECK(parse_angle("0.125").to_double() == 0.125);
}

TEST_CASE("rotation return set via the spec grammar") {
  LazySetPtr E = parse_set("rot alpha=golden u=0 v=0.5 x0=0");
  WindowSet s = restrict_to(*E, {0, 10000});
  CHECK(std::fabs(density(s).to_double() - 0.5) < 0.02);
  CHECK(s.contains(0));  // frac(0) = 0 lies in [0, 0.5)
  CHECK_THROWS_AS(parse_set("rot alpha=1.5 u=0 v=0.5"), std::invalid_argument);
}

TEST_CASE("ab set is the beatty-thinned block family") {
  Rational a(1, 3), b(1, 2);
  LazySetPtr E = ab_set(a, b);
  Window w{0, 100000};
  WindowSet got = restrict_to(*E, w);
  WindowSet blocks = restrict_to(*block_family(b), w);
  WindowSet beatty = restrict_to(*beatty_floor(3, 2), w);  // beta = b/a = 3/2
  CHECK(got.serialize() == set_intersect(blocks, beatty).serialize());
  // independent membership oracle for a stretch of the beatty factor
  for (i64 n = 1; n < 300; ++n) CHECK(beatty.contains(3 * n / 2));
  // on block tops the thinned density approaches a
  i64 top = 2 * (i64(1) << 16);
  double d = density(restrict_to(*E, {0, top})).to_double();
  CHECK(std::fabs(d - a.to_double()) < 0.02);
  CHECK_THROWS_AS(ab_set(Rational(1, 2), Rational(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(ab_set(Rational(0), Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(ab_set(Rational(1, 3), Rational(1)), std::invalid_argument);
}

TEST_CASE("ab grammar route matches the factory") {
  Window w{0, 20000};
  CHECK(restrict_to(*parse_set("ab a=1/3 b=1/2"), w).serialize() ==
        restrict_to(*ab_set(Rational(1, 3), Rational(1, 2)), w).serialize());
}
