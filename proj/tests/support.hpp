#pragma once

#include <cstdint>
#include <random>

#include "rsl/numerics.hpp"

namespace rsl::test {

/// Seeded generator for property tests; every test owns its own stream.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

inline Real rel_err(const Real& got, const Real& want) {
  using boost::multiprecision::abs;
  const Real scale = abs(want) > 0 ? abs(want) : Real(1);
  return abs(got - want) / scale;
}

inline Real rel_err(const Complex& got, const Complex& want) {
  const Real scale = abs(want) > 0 ? abs(want) : Real(1);
  return abs(got - want) / scale;
}

/// 10^(k - digits) at the precision in effect.
inline Real digits_eps(int k = 0) { return pow(Real(10), k - working_digits()); }

}  // namespace rsl::test
