#include "sequences.hpp"

#include <cmath>
#include <stdexcept>

#include "keyval.hpp"

namespace ergo {

i64 guarded_floor(DD x) {
  double f = dd_floor_raw(x);
  DD frac = dd_sub(x, DD(f));
  if (frac.hi == 0.0 && frac.lo == 0.0) return static_cast<i64>(f);
  if (dd_lt(frac, DD(kEndpointGuard)) ||
      dd_lt(dd_sub(DD(1.0), frac), DD(kEndpointGuard)))
    throw PrecisionError("floor argument within guard band of an integer");
  return static_cast<i64>(f);
}

IntSequence IntSequence::identity() { return IntSequence{}; }

IntSequence IntSequence::floor_power(DD b, DD c) {
  if (b.hi == 0.0) throw std::invalid_argument("pow: b must be nonzero");
  if (!(c.hi > 1.0)) throw std::invalid_argument("pow: c must be > 1");
  IntSequence s;
  s.kind_ = Kind::FloorPower;
  s.b_ = b;
  s.c_ = c;
  s.name_ = "pow";
  return s;
}

IntSequence IntSequence::floor_power_sum(DD b, DD c, DD d, DD a) {
  if (b.hi == 0.0 || d.hi == 0.0)
    throw std::invalid_argument("powsum: b and d must be nonzero");
  if (!(c.hi >= 1.0) || !(a.hi > 0.0) || dd_eq(a, c))
    throw std::invalid_argument("powsum: need c >= 1, a > 0, a != c");
  IntSequence s;
  s.kind_ = Kind::FloorPowerSum;
  s.b_ = b;
  s.c_ = c;
  s.d_ = d;
  s.a_ = a;
  s.name_ = "powsum";
  return s;
}

IntSequence IntSequence::floor_power_log(DD b, DD c, DD d_exp) {
  if (b.hi == 0.0) throw std::invalid_argument("powlog: b must be nonzero");
  if (!(c.hi > 1.0)) throw std::invalid_argument("powlog: c must be > 1");
  IntSequence s;
  s.kind_ = Kind::FloorPowerLog;
  s.b_ = b;
  s.c_ = c;
  s.d_ = d_exp;
  s.name_ = "powlog";
  return s;
}

IntSequence IntSequence::floor_power_log_sum(DD b, DD c, DD d, DD a_log) {
  if (b.hi == 0.0 || d.hi == 0.0)
    throw std::invalid_argument("powlogsum: b and d must be nonzero");
  if (!(c.hi >= 1.0) || !(a_log.hi > 1.0))
    throw std::invalid_argument("powlogsum: need c >= 1, a > 1");
  IntSequence s;
  s.kind_ = Kind::FloorPowerLogSum;
  s.b_ = b;
  s.c_ = c;
  s.d_ = d;
  s.a_ = a_log;
  s.name_ = "powlogsum";
  return s;
}

IntSequence IntSequence::floor_log() {
  IntSequence s;
  s.kind_ = Kind::FloorLog;
  s.name_ = "log";
  return s;
}

IntSequence IntSequence::poly_plus_log() {
  IntSequence s;
  s.kind_ = Kind::PolyPlusLog;
  s.name_ = "poly2log";
  return s;
}

IntSequence IntSequence::prime_power(DD c) {
  if (!(c.hi > 0.0)) throw std::invalid_argument("prime: c must be > 0");
  if (dd_eq(dd_sub(c, DD(dd_floor_raw(c))), DD(0.0)))
    throw std::invalid_argument("prime: c must not be an integer");
  IntSequence s;
  s.kind_ = Kind::PrimePower;
  s.c_ = c;
  s.name_ = "prime";
  s.primes_ = std::make_shared<PrimeCache>();
  return s;
}

IntSequence IntSequence::explicit_list(std::vector<i64> values) {
  if (values.empty()) throw std::invalid_argument("explicit sequence is empty");
  IntSequence s;
  s.kind_ = Kind::Explicit;
  s.explicit_ = std::move(values);
  s.name_ = "list";
  return s;
}

IntSequence IntSequence::parse(const std::string& spec) {
  SpecTokens t = tokenize_spec(spec);
  if (t.head == "id") return identity();
  if (t.head == "pow")
    return floor_power(dd_parse(t.get("b", "1")), dd_parse(t.require("c")));
  if (t.head == "powsum")
    return floor_power_sum(dd_parse(t.require("b")), dd_parse(t.require("c")),
                           dd_parse(t.require("d")), dd_parse(t.require("a")));
  if (t.head == "powlog")
    return floor_power_log(dd_parse(t.require("b")), dd_parse(t.require("c")),
                           dd_parse(t.require("d")));
  if (t.head == "powlogsum")
    return floor_power_log_sum(dd_parse(t.require("b")), dd_parse(t.require("c")),
                               dd_parse(t.require("d")), dd_parse(t.require("a")));
  if (t.head == "log") return floor_log();
  if (t.head == "poly2log") return poly_plus_log();
  if (t.head == "prime") return prime_power(dd_parse(t.require("c")));
  if (t.head == "list") {
    std::vector<i64> vals;
    for (long long v : parse_int_list(t.tail)) vals.push_back(v);
    return explicit_list(std::move(vals));
  }
  throw std::invalid_argument("unknown sequence spec: " + t.head);
}

i64 IntSequence::prime(i64 n) const {
  std::lock_guard<std::mutex> lock(primes_->mu);
  auto& ps = primes_->primes;
  if (static_cast<i64>(ps.size()) >= n) return ps[static_cast<std::size_t>(n - 1)];
  // sieve with a standard upper bound for the n-th prime
  double nn = static_cast<double>(n < 6 ? 6 : n);
  i64 limit = static_cast<i64>(nn * (std::log(nn) + std::log(std::log(nn)))) + 16;
  std::vector<bool> composite(static_cast<std::size_t>(limit + 1), false);
  ps.clear();
  for (i64 p = 2; p <= limit; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    ps.push_back(p);
    for (i64 q = p * p; q <= limit; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  if (static_cast<i64>(ps.size()) < n)
    throw std::out_of_range("prime index out of sieved range");
  return ps[static_cast<std::size_t>(n - 1)];
}

i64 IntSequence::eval(i64 n) const {
  if (n < 1) throw std::out_of_range("sequence index must be >= 1");
  DD nn = dd_from_i64(n);
  switch (kind_) {
    case Kind::Identity:
      return n;
    case Kind::FloorPower:
      return guarded_floor(dd_mul(b_, dd_pow(nn, c_)));
    case Kind::FloorPowerSum:
      return guarded_floor(
          dd_add(dd_mul(b_, dd_pow(nn, c_)), dd_mul(d_, dd_pow(nn, a_))));
    case Kind::FloorPowerLog: {
      if (n == 1) {
        // (log 1)^d is 0 for d > 0 and undefined otherwise
        if (d_.hi > 0.0) return 0;
        if (d_.hi == 0.0 && d_.lo == 0.0) return guarded_floor(b_);
        throw std::domain_error("powlog undefined at n=1 for negative d");
      }
      return guarded_floor(dd_mul(dd_mul(b_, dd_pow(nn, c_)), dd_pow(dd_log(nn), d_)));
    }
    case Kind::FloorPowerLogSum: {
      DD v = dd_mul(b_, dd_pow(nn, c_));
      if (n > 1) v = dd_add(v, dd_mul(d_, dd_pow(dd_log(nn), a_)));
      return guarded_floor(v);
    }
    case Kind::FloorLog:
      return guarded_floor(dd_log(nn));
    case Kind::PolyPlusLog:
      return guarded_floor(dd_add(dd_mul(nn, nn), dd_log(nn)));
    case Kind::PrimePower:
      return guarded_floor(dd_pow(dd_from_i64(prime(n)), c_));
    case Kind::Explicit:
      if (n > static_cast<i64>(explicit_.size()))
        throw std::out_of_range("explicit sequence index out of range");
      return explicit_[static_cast<std::size_t>(n - 1)];
  }
  throw std::logic_error("unreachable");
}

std::vector<i64> IntSequence::values_up_to(i64 N) const {
  if (N < 1) throw std::out_of_range("N must be >= 1");
  if (kind_ == Kind::PrimePower) prime(N);  // one sieve pass up front
  std::vector<i64> out;
  out.reserve(static_cast<std::size_t>(N));
  for (i64 n = 1; n <= N; ++n) out.push_back(eval(n));
  return out;
}

}  // namespace ergo
