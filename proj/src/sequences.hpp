#ifndef ERGOLAB_SEQUENCES_HPP
#define ERGOLAB_SEQUENCES_HPP

// Integer sequence evaluators n -> k_n. Floors of real expressions are taken
// in double-double with a guard band around integers: a value within 1e-20 of
// an integer (and not exactly integral) raises PrecisionError. "log" is the
// natural logarithm throughout.

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dd.hpp"
#include "lazy_set.hpp"
#include "rational.hpp"

namespace ergo {

class IntSequence {
 public:
  static IntSequence identity();                      // k_n = n
  static IntSequence floor_power(DD b, DD c);         // floor(b n^c), c > 1
  static IntSequence floor_power_sum(DD b, DD c, DD d, DD a);  // floor(b n^c + d n^a)
  static IntSequence floor_power_log(DD b, DD c, DD d_exp);    // floor(b n^c (log n)^d)
  static IntSequence floor_power_log_sum(DD b, DD c, DD d, DD a_log);  // floor(b n^c + d (log n)^a)
  static IntSequence floor_log();                     // floor(log n)
  static IntSequence poly_plus_log();                 // floor(n^2 + log n)
  static IntSequence prime_power(DD c);               // floor(p_n^c), c > 0 non-integer
  static IntSequence explicit_list(std::vector<i64> values);

  // Spec grammar: id | pow b= c= | powsum b= c= d= a= | powlog b= c= d= |
  //               powlogsum b= c= d= a= | log | poly2log | prime c= | list v,v,...
  static IntSequence parse(const std::string& spec);

  i64 eval(i64 n) const;  // n >= 1
  std::vector<i64> values_up_to(i64 N) const;
  const std::string& name() const { return name_; }

 private:
  enum class Kind {
    Identity,
    FloorPower,
    FloorPowerSum,
    FloorPowerLog,
    FloorPowerLogSum,
    FloorLog,
    PolyPlusLog,
    PrimePower,
    Explicit
  };
  Kind kind_ = Kind::Identity;
  DD b_, c_, d_, a_;
  std::vector<i64> explicit_;
  std::string name_ = "id";

  struct PrimeCache {
    std::mutex mu;
    std::vector<i64> primes;
  };
  std::shared_ptr<PrimeCache> primes_;  // PrimePower only

  i64 prime(i64 n) const;  // n-th prime, 1-based; sieves on demand
};

// floor with the integer guard band; exact dd integers pass through.
i64 guarded_floor(DD x);

}  // namespace ergo

#endif
