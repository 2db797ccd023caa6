#include "interval_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ergo {

void check_window(const Window& w) {
  if (w.lo >= w.hi) throw std::invalid_argument("empty window");
  if (w.hi - w.lo < 0 || w.hi - w.lo > kMaxWindowLength)
    throw std::out_of_range("window length exceeds 2^62");
}

WindowSet::WindowSet(Window w, std::vector<Interval> intervals) : window_(w) {
  check_window(w);
  std::vector<Interval> clipped;
  clipped.reserve(intervals.size());
  for (const Interval& iv : intervals) {
    i64 lo = std::max(iv.lo, w.lo), hi = std::min(iv.hi, w.hi);
    if (lo < hi) clipped.push_back({lo, hi});
  }
  std::sort(clipped.begin(), clipped.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const Interval& iv : clipped) {
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi)
      intervals_.back().hi = std::max(intervals_.back().hi, iv.hi);
    else
      intervals_.push_back(iv);
  }
}

WindowSet WindowSet::empty(Window w) { return WindowSet(w, {}); }
WindowSet WindowSet::full(Window w) { return WindowSet(w, {w}); }

i64 WindowSet::count() const {
  i64 total = 0;
  for (const Interval& iv : intervals_) total += iv.length();
  return total;
}

bool WindowSet::contains(i64 n) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), n,
                             [](i64 v, const Interval& iv) { return v < iv.lo; });
  return it != intervals_.begin() && n < std::prev(it)->hi;
}

std::string WindowSet::serialize() const {
  std::ostringstream os;
  os << "window=[" << window_.lo << "," << window_.hi << ") intervals=";
  for (const Interval& iv : intervals_) os << "[" << iv.lo << "," << iv.hi << ")";
  return os.str();
}

namespace {
Interval parse_pair(const std::string& text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '[')
    throw std::invalid_argument("expected '[' at position " + std::to_string(pos));
  std::size_t comma = text.find(',', pos);
  std::size_t close = text.find(')', pos);
  if (comma == std::string::npos || close == std::string::npos || comma > close)
    throw std::invalid_argument("malformed interval at position " + std::to_string(pos));
  Interval iv;
  iv.lo = std::stoll(text.substr(pos + 1, comma - pos - 1));
  iv.hi = std::stoll(text.substr(comma + 1, close - comma - 1));
  pos = close + 1;
  return iv;
}
}  // namespace

WindowSet WindowSet::parse(const std::string& text) {
  const std::string wkey = "window=", ikey = " intervals=";
  if (text.rfind(wkey, 0) != 0) throw std::invalid_argument("missing window= prefix");
  std::size_t pos = wkey.size();
  Window w = parse_pair(text, pos);
  if (text.compare(pos, ikey.size(), ikey) != 0)
    throw std::invalid_argument("missing intervals= field");
  pos += ikey.size();
  std::vector<Interval> ivs;
  while (pos < text.size()) ivs.push_back(parse_pair(text, pos));
  return WindowSet(w, std::move(ivs));
}

namespace {
void require_same_window(const WindowSet& x, const WindowSet& y) {
  if (!(x.window() == y.window()))
    throw std::invalid_argument("window mismatch in set operation");
}
}  // namespace

WindowSet set_union(const WindowSet& x, const WindowSet& y) {
  require_same_window(x, y);
  std::vector<Interval> merged;
  merged.reserve(x.intervals().size() + y.intervals().size());
  std::merge(x.intervals().begin(), x.intervals().end(), y.intervals().begin(),
             y.intervals().end(), std::back_inserter(merged),
             [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  WindowSet out;
  out.window_ = x.window();
  for (const Interval& iv : merged) {
    if (!out.intervals_.empty() && iv.lo <= out.intervals_.back().hi)
      out.intervals_.back().hi = std::max(out.intervals_.back().hi, iv.hi);
    else
      out.intervals_.push_back(iv);
  }
  return out;
}

WindowSet set_intersect(const WindowSet& x, const WindowSet& y) {
  require_same_window(x, y);
  WindowSet out;
  out.window_ = x.window();
  std::size_t i = 0, j = 0;
  const auto& a = x.intervals();
  const auto& b = y.intervals();
  while (i < a.size() && j < b.size()) {
    i64 lo = std::max(a[i].lo, b[j].lo), hi = std::min(a[i].hi, b[j].hi);
    if (lo < hi) out.intervals_.push_back({lo, hi});
    (a[i].hi < b[j].hi) ? ++i : ++j;
  }
  return out;
}

WindowSet set_complement(const WindowSet& x) {
  WindowSet out;
  out.window_ = x.window();
  i64 cursor = x.window().lo;
  for (const Interval& iv : x.intervals()) {
    if (cursor < iv.lo) out.intervals_.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < x.window().hi) out.intervals_.push_back({cursor, x.window().hi});
  return out;
}

WindowSet shift_restrict(const WindowSet& x, i64 h, Window w) {
  check_window(w);
  if (x.window().lo > w.lo + h || x.window().hi < w.hi + h)
    throw std::invalid_argument(
        "shift source window does not cover the shifted target window");
  WindowSet out;
  out.window_ = w;
  for (const Interval& iv : x.intervals()) {
    i64 lo = std::max(iv.lo - h, w.lo), hi = std::min(iv.hi - h, w.hi);
    if (lo < hi) out.intervals_.push_back({lo, hi});
  }
  return out;
}

Rational density(const WindowSet& x) {
  return Rational(x.count(), x.window().length());
}

PrefixCounter::PrefixCounter(const WindowSet& x)
    : intervals_(x.intervals()), window_(x.window()) {
  prefix_.reserve(intervals_.size() + 1);
  i64 acc = 0;
  for (const Interval& iv : intervals_) {
    prefix_.push_back(acc);
    acc += iv.length();
  }
  prefix_.push_back(acc);
}

i64 PrefixCounter::count_below(i64 p) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), p,
                             [](i64 v, const Interval& iv) { return v < iv.lo; });
  std::size_t idx = static_cast<std::size_t>(it - intervals_.begin());
  i64 acc = prefix_[idx];
  if (idx > 0 && p < intervals_[idx - 1].hi)
    acc -= intervals_[idx - 1].hi - p;
  return acc;
}

}  // namespace ergo
