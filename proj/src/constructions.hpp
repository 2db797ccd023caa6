#ifndef ERGOLAB_CONSTRUCTIONS_HPP
#define ERGOLAB_CONSTRUCTIONS_HPP

// Builders for the named test sets, plus the textual set-spec mini-language
// shared by the CLI.

#include <string>

#include "lazy_set.hpp"
#include "rational.hpp"

namespace ergo {

// Union of [4^n, 2*4^n), n >= 0.
LazySetPtr hindman_set();

// For 0 < a <= b < 1: a block family A with upper density b along dyadic
// windows, intersected with the Beatty set {floor(n*b/a) : n >= 1}. The result
// has upper density a while its shift-unions saturate at b.
LazySetPtr ab_set(Rational a, Rational b);

// {n >= 0 : frac(x0 + n*alpha) in [u, v)} for an irrational rotation angle.
LazySetPtr rotation_return_set(DD alpha, DD x0, DD arc_lo, DD arc_hi);

// Spec grammar:
//   hindman
//   ab a=<rat> b=<rat>
//   rot alpha=<dec|golden|sqrt2|sqrt3> u=<dec> v=<dec> x0=<dec>
//   periodic m=<int> r=<int,int,...>
//   intervals [a,b)[c,d)...
//   all                      (shorthand for periodic m=1 r=0)
LazySetPtr parse_set(const std::string& spec);

// Parses a rotation angle: named constant or decimal string.
DD parse_angle(const std::string& text);

}  // namespace ergo

#endif
