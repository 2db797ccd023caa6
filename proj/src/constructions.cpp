#include "constructions.hpp"

#include <stdexcept>

#include "keyval.hpp"

namespace ergo {

LazySetPtr hindman_set() { return hindman_blocks(); }

LazySetPtr ab_set(Rational a, Rational b) {
  if (!(Rational(0) < a && a <= b && b < Rational(1)))
    throw std::invalid_argument("ab set requires 0 < a <= b < 1");
  Rational beta = b / a;  // >= 1
  return lazy_intersect(block_family(b),
                        beatty_floor(static_cast<i64>(beta.num),
                                     static_cast<i64>(beta.den)));
}

LazySetPtr rotation_return_set(DD alpha, DD x0, DD arc_lo, DD arc_hi) {
  if (!(alpha.hi > 0.0 && alpha.hi < 1.0))
    throw std::invalid_argument("rotation angle must lie in (0,1)");
  return beatty_rotation(alpha, arc_lo, arc_hi, x0);
}

DD parse_angle(const std::string& text) {
  if (text == "golden") return dd_golden();
  if (text == "sqrt2") return dd_sqrt2m1();
  if (text == "sqrt3") return dd_sqrt3m1();
  return dd_parse(text);
}

LazySetPtr parse_set(const std::string& spec) {
  SpecTokens t = tokenize_spec(spec);
  if (t.head == "hindman") return hindman_set();
  if (t.head == "all") return periodic_set(1, {0});
  if (t.head == "ab")
    return ab_set(parse_rational(t.require("a")), parse_rational(t.require("b")));
  if (t.head == "rot")
    return rotation_return_set(parse_angle(t.require("alpha")),
                               dd_parse(t.get("x0", "0")),
                               dd_parse(t.require("u")), dd_parse(t.require("v")));
  if (t.head == "periodic") {
    std::vector<i64> residues;
    for (long long r : parse_int_list(t.require("r"))) residues.push_back(r);
    return periodic_set(std::stoll(t.require("m")), std::move(residues));
  }
  if (t.head == "intervals") {
    std::vector<Interval> ivs;
    const std::string& body = t.tail;
    std::size_t pos = body.find('[');
    while (pos != std::string::npos) {
      std::size_t comma = body.find(',', pos), close = body.find(')', pos);
      if (comma == std::string::npos || close == std::string::npos || comma > close)
        throw std::invalid_argument("malformed interval in set spec at position " +
                                    std::to_string(pos));
      ivs.push_back({std::stoll(body.substr(pos + 1, comma - pos - 1)),
                     std::stoll(body.substr(comma + 1, close - comma - 1))});
      pos = body.find('[', close);
    }
    if (ivs.empty()) throw std::invalid_argument("intervals spec needs intervals");
    return explicit_intervals(std::move(ivs));
  }
  throw std::invalid_argument("unknown set spec: " + t.head);
}

}  // namespace ergo
