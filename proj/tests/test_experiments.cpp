#include <doctest.h>

#include <cmath>

#include "constructions.hpp"
#include "experiments.hpp"

using namespace ergo;

TEST_CASE("covering curve on a periodic set follows the closed form") {
  LazySetPtr E = periodic_set(6, {0});
  CoveringReport rep =
      covering_curve(*E, IntSequence::identity(), {1, 2, 3, 4, 5, 6}, 600, 6000, 300);
  REQUIRE(rep.points.size() == 6);
  for (std::size_t i = 0; i < rep.points.size(); ++i)
    CHECK(rep.points[i].best == Rational(static_cast<i64>(i) + 1, 6));
  CHECK(rep.points.back().best == Rational(1));
}

TEST_CASE("covering curve is monotone in K and trivial on the full set") {
  LazySetPtr E = hindman_set();
  CoveringReport rep =
      covering_curve(*E, IntSequence::identity(), {1, 4, 16, 64}, 1024, 65536, 512);
  Rational prev(0);
  for (const CoveringPoint& p : rep.points) {
    CHECK(p.best >= prev);
    prev = p.best;
  }
  CoveringReport all = covering_curve(*periodic_set(1, {0}), IntSequence::identity(),
                                      {1}, 100, 1000, 50);
  CHECK(all.points[0].best == Rational(1));
  CHECK_THROWS_AS(
      covering_curve(*E, IntSequence::identity(), {4, 2}, 100, 1000, 50),
      std::invalid_argument);
  CHECK_THROWS_AS(covering_curve(*E, IntSequence::identity(), {}, 100, 1000, 50),
                  std::invalid_argument);
}

TEST_CASE("union stability rows stay within the boundary bound") {
  std::vector<StabilityRow> rows = hindman_counterexample(10, {0, 1, 10});
  REQUIRE(rows.size() == 33);  // three K values, N = 0..10
  for (const StabilityRow& r : rows) CHECK(r.within);
  // the spot value from a hand count: K = 0, N = 3 gives 85/128
  bool seen = false;
  for (const StabilityRow& r : rows)
    if (r.K == 0 && r.N == 3) {
      CHECK(r.value == Rational(85, 128));
      seen = true;
    }
  CHECK(seen);
  CHECK_THROWS_AS(hindman_counterexample(0, {1}), std::out_of_range);
  CHECK_THROWS_AS(hindman_counterexample(5, {-1}), std::invalid_argument);
}

TEST_CASE("larger unions drift no further from two thirds than the bound says") {
  for (const StabilityRow& r : hindman_counterexample(9, {100})) {
    double gap = std::fabs(r.value.to_double() - 2.0 / 3.0);
    CHECK(gap <= r.bound.to_double());
  }
}

TEST_CASE("complement witness search on rotations finds a strong shift") {
  LazySetPtr E = parse_set("rot alpha=golden u=0 v=0.5 x0=0");
  WitnessResult w = complement_witness_search(*E, 10, 10000, 1000000, 5000);
  REQUIRE(w.found);
  CHECK(w.value.to_double() >= 0.1);
  CHECK(w.h >= 1);
  CHECK(w.h <= 10);
}

TEST_CASE("complement witness search returns NONE for the full set") {
  WitnessResult w = complement_witness_search(*periodic_set(1, {0}), 5, 100, 1000, 50);
  CHECK(!w.found);
}

TEST_CASE("classifier: parity obstruction versus identity sweeping") {
  IntSequence even_shifts = IntSequence::parse("list 2,4,6,8,10,12,14,16");
  IntSequence id = IntSequence::identity();
  ScanParams params{512, 8192, 256};
  ClassifierReport obstructed = sweeping_classifier(
      even_shifts, {"evens"}, {periodic_set(2, {0})}, {1, 4, 8}, params);
  REQUIRE(obstructed.entries.size() == 1);
  CHECK(obstructed.entries[0].verdict == Verdict::Obstructed);
  CHECK(obstructed.entries[0].curve.points.back().best == Rational(1, 2));
  CHECK(obstructed.overall.find("OBSTRUCTED(evens)") != std::string::npos);

  ClassifierReport sweeping = sweeping_classifier(
      id, {"evens", "thirds"}, {periodic_set(2, {0}), periodic_set(3, {0})},
      {1, 2, 3}, params);
  for (const ClassifierEntry& e : sweeping.entries)
    CHECK(e.verdict == Verdict::SweepingEvidence);
  CHECK(sweeping.overall.find("SWEEPING-EVIDENCE") != std::string::npos);
  CHECK(sweeping.overall.find("not a proof") != std::string::npos);
}

TEST_CASE("classifier validates its inputs") {
  ScanParams params;
  CHECK_THROWS_AS(sweeping_classifier(IntSequence::identity(), {"a"},
                                      {periodic_set(2, {0}), periodic_set(3, {0})},
                                      {1, 2}, params),
                  std::invalid_argument);
}
