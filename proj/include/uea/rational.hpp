#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace uea {

/// Arbitrary-precision rational number (GMP-backed).
using Rational = mpq_class;

/// num/den with canonicalization (mpq_class constructors do not canonicalize).
inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Canonical text form: "p" or "p/q" with q > 0.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p" or "p/q"; rejects anything else.
inline Rational rational_from_string(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) {
    throw std::invalid_argument("rational_from_string: bad literal '" + text + "'");
  }
  r.canonicalize();
  return r;
}

}  // namespace uea
