#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace shiftarg {

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator (mpq_class canonical form); no floating point anywhere.
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "num" or "num/den" with optional sign.
inline Rational rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  if (sgn(r.get_den()) == 0)
    throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

/// Formats as "num" for integers, "num/den" otherwise.
inline std::string rat_str(const Rational& x) { return x.get_str(); }

inline Rational factorial(unsigned n) {
  Rational r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= static_cast<long>(k);
  return r;
}

inline Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Rational r = 1;
  for (unsigned j = 0; j < k; ++j) {
    r *= static_cast<long>(n - j);
    r /= static_cast<long>(j + 1);
  }
  return r;
}

}  // namespace shiftarg
