#pragma once

#include <cstdint>

#include "chern/rational.hpp"

namespace chern {

// Deterministic xorshift generator for the randomized suites.
class Prng {
 public:
  explicit Prng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  uint64_t next() {
    uint64_t x = state_;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    state_ = x;
    return x * 0x2545f4914f6cdd1dull;
  }

  long uniform(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  Rational rational(long max_abs_num = 20, long max_den = 12) {
    long n = uniform(-max_abs_num, max_abs_num);
    long d = uniform(1, max_den);
    return Rational(n, d);
  }

 private:
  uint64_t state_;
};

}  // namespace chern
