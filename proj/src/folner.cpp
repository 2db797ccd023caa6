#include "folner.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ergo {

FolnerFamily FolnerFamily::initial_segments() {
  FolnerFamily f;
  f.rule_ = [](int N) {
    if (N < 1) throw std::out_of_range("initial-segment index must be >= 1");
    return Window{0, N};
  };
  f.name_ = "segments";
  return f;
}

FolnerFamily FolnerFamily::dyadic_even() {
  FolnerFamily f;
  f.rule_ = [](int N) {
    if (N < 0 || N > 30) throw std::out_of_range("dyadic index out of range [0,30]");
    return Window{0, i64(1) << (2 * N + 1)};
  };
  f.name_ = "dyadic";
  f.max_index_ = 30;
  return f;
}

FolnerFamily FolnerFamily::shifted_intervals(std::function<Window(int)> rule) {
  FolnerFamily f;
  f.rule_ = std::move(rule);
  f.name_ = "shifted";
  return f;
}

FolnerFamily FolnerFamily::explicit_list(std::vector<Window> windows) {
  for (const Window& w : windows) check_window(w);
  FolnerFamily f;
  f.rule_ = [ws = std::move(windows)](int N) {
    if (N < 1 || static_cast<std::size_t>(N) > ws.size())
      throw std::out_of_range("explicit Folner index out of range");
    return ws[static_cast<std::size_t>(N) - 1];
  };
  f.name_ = "explicit";
  return f;
}

FolnerFamily FolnerFamily::parse(const std::string& spec) {
  if (spec == "segments") return initial_segments();
  if (spec == "dyadic") return dyadic_even();
  if (spec.rfind("explicit", 0) == 0) {
    std::vector<Window> ws;
    std::size_t pos = spec.find('[');
    while (pos != std::string::npos) {
      std::size_t comma = spec.find(',', pos), close = spec.find(')', pos);
      if (comma == std::string::npos || close == std::string::npos || comma > close)
        throw std::invalid_argument("malformed explicit window at position " +
                                    std::to_string(pos));
      ws.push_back({std::stoll(spec.substr(pos + 1, comma - pos - 1)),
                    std::stoll(spec.substr(comma + 1, close - comma - 1))});
      pos = spec.find('[', close);
    }
    if (ws.empty()) throw std::invalid_argument("explicit family needs windows");
    FolnerFamily f = explicit_list(std::move(ws));
    return f;
  }
  throw std::invalid_argument("unknown Folner family: " + spec);
}

Window FolnerFamily::window(int N) const {
  Window w = rule_(N);
  check_window(w);
  return w;
}

Rational FolnerFamily::defect(int N, i64 g) const {
  i64 len = window(N).length();
  i64 ag = g < 0 ? -g : g;
  return Rational(std::min(2 * ag, 2 * len), len);
}

}  // namespace ergo
