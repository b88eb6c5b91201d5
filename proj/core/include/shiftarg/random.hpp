#pragma once

#include <random>

#include "shiftarg/linalg.hpp"
#include "shiftarg/rational.hpp"

namespace shiftarg {

/// Seeded sampler for the probabilistic rank checks. Integer entries in
/// [-10, 10] keep kernels exact and runs reproducible.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  long int_in(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  Rational rational(long lo = -10, long hi = 10) {
    return Rational(int_in(lo, hi));
  }

  Rational nonzero_rational(long lo = -10, long hi = 10) {
    while (true) {
      Rational r = rational(lo, hi);
      if (!is_zero(r)) return r;
    }
  }

  QVector vector(std::size_t n, long lo = -10, long hi = 10) {
    QVector v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational(lo, hi));
    return v;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace shiftarg
