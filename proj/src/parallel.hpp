#ifndef ERGOLAB_PARALLEL_HPP
#define ERGOLAB_PARALLEL_HPP

// Deterministic fork-join over an index range. Thread count comes from
// ERGOLAB_THREADS (default: hardware concurrency); results are assembled in
// index order so output is identical for any thread count.

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ergo {

inline int thread_count() {
  if (const char* env = std::getenv("ERGOLAB_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// fn(i) for i in [0, n), any order; exceptions rethrown on the caller.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  int threads = thread_count();
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = static_cast<std::size_t>(t); i < n;
             i += static_cast<std::size_t>(threads))
          fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ergo

#endif
