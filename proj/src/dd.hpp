#ifndef ERGOLAB_DD_HPP
#define ERGOLAB_DD_HPP

// Double-double arithmetic (~31 significant decimal digits), used wherever a
// real parameter feeds an exact integer decision (floors of n^c, rotation
// membership). Error-free transforms follow the usual Dekker/Knuth scheme.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ergo {

struct DD {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DD() = default;
  constexpr DD(double h) : hi(h), lo(0.0) {}
  constexpr DD(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

namespace detail {
inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}
inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}
inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}
}  // namespace detail

inline DD dd_add(DD a, DD b) {
  DD s = detail::two_sum(a.hi, b.hi);
  DD t = detail::two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = detail::quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return detail::quick_two_sum(s.hi, s.lo);
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }
inline DD dd_sub(DD a, DD b) { return dd_add(a, dd_neg(b)); }

inline DD dd_mul(DD a, DD b) {
  DD p = detail::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, p.lo);
}

inline DD dd_div(DD a, DD b) {
  double q1 = a.hi / b.hi;
  DD r = dd_sub(a, dd_mul(DD(q1), b));
  double q2 = r.hi / b.hi;
  r = dd_sub(r, dd_mul(DD(q2), b));
  double q3 = r.hi / b.hi;
  DD q = detail::quick_two_sum(q1, q2);
  return dd_add(q, DD(q3));
}

inline bool dd_lt(DD a, DD b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool dd_le(DD a, DD b) { return !dd_lt(b, a); }
inline bool dd_eq(DD a, DD b) { return a.hi == b.hi && a.lo == b.lo; }

inline DD dd_abs(DD a) { return a.hi < 0 || (a.hi == 0 && a.lo < 0) ? dd_neg(a) : a; }

// Exact for |n| < 2^53 in each limb; splits larger 64-bit values.
inline DD dd_from_i64(std::int64_t n) {
  double h = static_cast<double>(n);
  double l = static_cast<double>(n - static_cast<std::int64_t>(h));
  return detail::quick_two_sum(h, l);
}

// floor(x) as double-double-consistent integer part.
inline double dd_floor_raw(DD a) {
  double f = std::floor(a.hi);
  if (f == a.hi) f += std::floor(a.lo);
  return f;
}

inline DD dd_ldexp(DD a, int e) { return {std::ldexp(a.hi, e), std::ldexp(a.lo, e)}; }

inline const DD DD_LN2{6.931471805599452862e-01, 2.319046813846299558e-17};
inline const DD DD_PI{3.141592653589793116e+00, 1.224646799147353207e-16};
inline const DD DD_2PI{6.283185307179586232e+00, 2.449293598294706414e-16};

inline DD dd_exp(DD a) {
  if (a.hi > 709.0) throw std::overflow_error("dd_exp overflow");
  if (a.hi < -709.0) return DD(0.0);
  double m = std::floor(a.hi / DD_LN2.hi + 0.5);
  DD r = dd_sub(a, dd_mul(DD(m), DD_LN2));
  // Taylor series on |r| <= ln2/2
  DD sum = dd_add(DD(1.0), r);
  DD term = r;
  for (int k = 2; k < 32; ++k) {
    term = dd_div(dd_mul(term, r), DD(static_cast<double>(k)));
    sum = dd_add(sum, term);
    if (std::fabs(term.hi) < 1e-35 * std::fabs(sum.hi)) break;
  }
  return dd_ldexp(sum, static_cast<int>(m));
}

inline DD dd_log(DD a) {
  if (a.hi <= 0.0) throw std::domain_error("dd_log of non-positive value");
  if (a.hi == 1.0 && a.lo == 0.0) return DD(0.0);
  DD y(std::log(a.hi));
  // one Newton step: y' = y + a*exp(-y) - 1
  y = dd_sub(dd_add(y, dd_mul(a, dd_exp(dd_neg(y)))), DD(1.0));
  return y;
}

inline DD dd_sqrt(DD a) {
  if (a.hi < 0.0) throw std::domain_error("dd_sqrt of negative value");
  if (a.hi == 0.0) return DD(0.0);
  double y0 = std::sqrt(a.hi);
  DD y(y0);
  // Newton: y' = y + (a - y^2) / (2y)
  DD r = dd_sub(a, dd_mul(y, y));
  return dd_add(y, dd_div(r, dd_ldexp(y, 1)));
}

// x^p for x > 0
inline DD dd_powi(DD x, long long n) {
  if (n < 0) return dd_div(DD(1.0), dd_powi(x, -n));
  DD acc(1.0);
  DD base = x;
  while (n > 0) {
    if (n & 1) acc = dd_mul(acc, base);
    base = dd_mul(base, base);
    n >>= 1;
  }
  return acc;
}

inline DD dd_pow(DD x, DD p) {
  // Exponents with denominator 1, 2 or 4 take the square-and-multiply path so
  // values like 4^1.5 = 8 or 16^1.25 = 32 come out exact instead of landing
  // inside the floor guard band.
  for (int den = 1; den <= 4; den *= 2) {
    DD scaled = dd_mul(p, DD(static_cast<double>(den)));
    double t = dd_floor_raw(scaled);
    if (dd_eq(scaled, DD(t)) && t >= -4096.0 && t <= 4096.0) {
      DD root = x;
      if (den >= 2) root = dd_sqrt(root);
      if (den == 4) root = dd_sqrt(root);
      return dd_powi(root, static_cast<long long>(t));
    }
  }
  return dd_exp(dd_mul(p, dd_log(x)));
}

// Fractional part in [0,1).
inline DD dd_frac(DD a) {
  DD f = dd_sub(a, DD(dd_floor_raw(a)));
  if (f.hi < 0.0) f = dd_add(f, DD(1.0));
  if (f.hi >= 1.0) f = dd_sub(f, DD(1.0));
  return f;
}

// Parse a plain decimal string ("-12.3456...", up to ~32 digits) to DD.
inline DD dd_parse(const std::string& s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
  DD acc(0.0);
  int frac_digits = 0;
  bool in_frac = false, any = false;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '.') {
      if (in_frac) throw std::invalid_argument("bad decimal: " + s);
      in_frac = true;
    } else if (ch >= '0' && ch <= '9') {
      acc = dd_add(dd_mul(acc, DD(10.0)), DD(static_cast<double>(ch - '0')));
      if (in_frac) ++frac_digits;
      any = true;
    } else {
      throw std::invalid_argument("bad decimal: " + s);
    }
  }
  if (!any) throw std::invalid_argument("bad decimal: " + s);
  for (int k = 0; k < frac_digits; ++k) acc = dd_div(acc, DD(10.0));
  return neg ? dd_neg(acc) : acc;
}

// Named irrational constants accepted wherever a decimal angle is expected.
inline DD dd_golden() {  // (sqrt(5)-1)/2
  return dd_ldexp(dd_sub(dd_sqrt(DD(5.0)), DD(1.0)), -1);
}
inline DD dd_sqrt2m1() { return dd_sub(dd_sqrt(DD(2.0)), DD(1.0)); }
inline DD dd_sqrt3m1() { return dd_sub(dd_sqrt(DD(3.0)), DD(1.0)); }

}  // namespace ergo

#endif
