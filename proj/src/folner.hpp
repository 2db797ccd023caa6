#ifndef ERGOLAB_FOLNER_HPP
#define ERGOLAB_FOLNER_HPP

// Interval Folner families N -> F_N in Z, with their exact symmetric-difference
// defects |F_N delta (F_N - g)| / |F_N|.

#include <functional>
#include <string>
#include <vector>

#include "interval_set.hpp"
#include "rational.hpp"

namespace ergo {

class FolnerFamily {
 public:
  // F_N = [0, N)
  static FolnerFamily initial_segments();
  // F_N = [0, 2^(2N+1))
  static FolnerFamily dyadic_even();
  static FolnerFamily shifted_intervals(std::function<Window(int)> rule);
  static FolnerFamily explicit_list(std::vector<Window> windows);

  // "segments" | "dyadic" | "explicit [a,b)[c,d)..."
  static FolnerFamily parse(const std::string& spec);

  Window window(int N) const;
  int max_index() const { return max_index_; }  // <0 means unbounded
  const std::string& name() const { return name_; }

  // |F_N delta (F_N - g)| / |F_N|; for intervals this is min(2|g|, 2|F_N|)/|F_N|.
  Rational defect(int N, i64 g) const;

 private:
  std::function<Window(int)> rule_;
  int max_index_ = -1;
  std::string name_;
};

}  // namespace ergo

#endif
