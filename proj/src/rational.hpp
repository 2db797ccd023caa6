#ifndef ERGOLAB_RATIONAL_HPP
#define ERGOLAB_RATIONAL_HPP

// Exact rationals over 128-bit integers. The density engine never touches
// floating point; decimals appear only in rendered output.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ergo {

using i64 = std::int64_t;
using i128 = __int128;

inline std::string i128_to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

struct Rational {
  i128 num = 0;
  i128 den = 1;  // always > 0, gcd(num,den)=1

  Rational() = default;
  Rational(i128 n, i128 d) : num(n), den(d) { normalize(); }
  Rational(i64 n) : num(n), den(1) {}

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    i128 a = num < 0 ? -num : num, b = den;
    while (b) { i128 t = a % b; a = b; b = t; }
    if (a > 1) { num /= a; den /= a; }
  }

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  std::string to_fraction_string() const {
    return i128_to_string(num) + "/" + i128_to_string(den);
  }

  // Fixed 12-place decimal rendering, round half away from zero.
  std::string to_decimal_string() const {
    bool neg = num < 0;
    i128 n = neg ? -num : num;
    i128 ip = n / den, rem = n % den;
    std::string out = (neg && (ip != 0 || rem != 0)) ? "-" : "";
    out += i128_to_string(ip);
    out += '.';
    for (int k = 0; k < 12; ++k) {
      rem *= 10;
      i128 d = rem / den;
      rem %= den;
      if (k == 11 && rem * 2 >= den && d < 9) ++d;  // cheap final round, no carry chain
      out.push_back(static_cast<char>('0' + static_cast<int>(d)));
    }
    return out;
  }
};

inline Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
inline Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}
inline Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num * b.num, a.den * b.den);
}
inline Rational operator/(const Rational& a, const Rational& b) {
  if (b.num == 0) throw std::invalid_argument("rational division by zero");
  return Rational(a.num * b.den, a.den * b.num);
}
inline bool operator==(const Rational& a, const Rational& b) {
  return a.num == b.num && a.den == b.den;
}
inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
inline bool operator<(const Rational& a, const Rational& b) {
  return a.num * b.den < b.num * a.den;
}
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

// Parse "p/q" or an integer literal.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  auto to_i128 = [](const std::string& t) -> i128 {
    if (t.empty()) throw std::invalid_argument("empty rational component");
    std::size_t i = 0;
    bool neg = false;
    if (t[i] == '+' || t[i] == '-') neg = (t[i++] == '-');
    if (i == t.size()) throw std::invalid_argument("bad rational: " + t);
    i128 v = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("bad rational: " + t);
      v = v * 10 + (t[i] - '0');
    }
    return neg ? -v : v;
  };
  if (slash == std::string::npos) return Rational(to_i128(s), 1);
  return Rational(to_i128(s.substr(0, slash)), to_i128(s.substr(slash + 1)));
}

}  // namespace ergo

#endif
