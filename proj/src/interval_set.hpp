#ifndef ERGOLAB_INTERVAL_SET_HPP
#define ERGOLAB_INTERVAL_SET_HPP

// Exact subsets of Z as sorted disjoint half-open intervals inside an ambient
// window. All algebra is exact; counts stay within 64 bits because ambient
// windows are capped at length 2^62.

#include <string>
#include <vector>

#include "rational.hpp"

namespace ergo {

inline constexpr i64 kMaxWindowLength = i64(1) << 62;

struct Interval {
  i64 lo = 0;
  i64 hi = 0;  // half-open [lo, hi)

  i64 length() const { return hi - lo; }
  bool valid() const { return lo < hi; }
};

inline bool operator==(const Interval& a, const Interval& b) {
  return a.lo == b.lo && a.hi == b.hi;
}

using Window = Interval;

void check_window(const Window& w);  // throws std::out_of_range / invalid_argument

class WindowSet {
 public:
  WindowSet() = default;
  // Canonicalizes: sorts, merges overlapping/adjacent pieces, clips to window.
  WindowSet(Window w, std::vector<Interval> intervals);

  static WindowSet empty(Window w);
  static WindowSet full(Window w);

  const Window& window() const { return window_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  i64 count() const;
  bool contains(i64 n) const;

  std::string serialize() const;
  static WindowSet parse(const std::string& text);

 private:
  Window window_{0, 1};
  std::vector<Interval> intervals_;  // canonical: sorted, prev.hi < next.lo

  friend WindowSet set_union(const WindowSet&, const WindowSet&);
  friend WindowSet set_intersect(const WindowSet&, const WindowSet&);
  friend WindowSet set_complement(const WindowSet&);
  friend WindowSet shift_restrict(const WindowSet&, i64, Window);
};

// Union/intersection require x.window == y.window; complement is relative to
// the window.
WindowSet set_union(const WindowSet& x, const WindowSet& y);
WindowSet set_intersect(const WindowSet& x, const WindowSet& y);
WindowSet set_complement(const WindowSet& x);

// {n in w : n + h in x}. The source must cover [w.lo+h, w.hi+h); anything less
// would silently truncate at the boundary, so it is an error.
WindowSet shift_restrict(const WindowSet& x, i64 h, Window w);

Rational density(const WindowSet& x);

// Cumulative counts for fast sub-window queries: number of members in
// [window.lo, p).
class PrefixCounter {
 public:
  explicit PrefixCounter(const WindowSet& x);
  i64 count_below(i64 p) const;
  i64 count_in(i64 lo, i64 hi) const { return count_below(hi) - count_below(lo); }

 private:
  std::vector<Interval> intervals_;
  std::vector<i64> prefix_;  // prefix_[i] = members strictly before intervals_[i].lo
  Window window_;
};

}  // namespace ergo

#endif
