#ifndef ERGOLAB_LAZY_SET_HPP
#define ERGOLAB_LAZY_SET_HPP

// Infinite structured subsets of Z as monotone streams of disjoint intervals.
// A LazySet is an immutable rule; stream(from) yields, in increasing order,
// every interval with hi > from. Restriction to a window always terminates.

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "dd.hpp"
#include "interval_set.hpp"
#include "rational.hpp"

namespace ergo {

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntervalStream {
 public:
  virtual ~IntervalStream() = default;
  virtual std::optional<Interval> next() = 0;
};

class LazySet {
 public:
  virtual ~LazySet() = default;
  // Disjoint intervals meeting [from, upto), in increasing order. Intervals
  // may be clipped at upto; the stream always terminates.
  virtual std::unique_ptr<IntervalStream> stream(i64 from, i64 upto) const = 0;
};

using LazySetPtr = std::shared_ptr<const LazySet>;

// Materializes {n in w : n in set} in canonical form.
WindowSet restrict_to(const LazySet& set, Window w);

// Hindman's block set: union of [4^n, 2*4^n) for n >= 0.
LazySetPtr hindman_blocks();

// Residue classes mod m; covers all of Z.
LazySetPtr periodic_set(i64 modulus, std::vector<i64> residues);

// {n >= 0 : frac(x0 + n*alpha) in [arc_lo, arc_hi)}. Membership decided in
// double-double with a guard band: a fractional part within 1e-20 of an arc
// endpoint raises PrecisionError instead of guessing.
LazySetPtr beatty_rotation(DD alpha, DD arc_lo, DD arc_hi, DD x0);

// {floor(n*p/q) : n >= 1}, requires p >= q >= 1 so values are non-decreasing.
LazySetPtr beatty_floor(i64 p, i64 q);

// Block family with upper density b along windows [0, 2*4^n): block tops at
// t_n = 2*4^n, cumulative count floor(b*t_n). b = 2/3 reproduces Hindman's set.
LazySetPtr block_family(Rational b);

// Intersection of two lazy sets (merge of the two monotone streams).
LazySetPtr lazy_intersect(LazySetPtr a, LazySetPtr b);

// A fixed finite interval list.
LazySetPtr explicit_intervals(std::vector<Interval> intervals);

inline constexpr double kEndpointGuard = 1e-20;

}  // namespace ergo

#endif
