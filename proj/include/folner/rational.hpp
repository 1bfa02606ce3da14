#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace folner {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational. Every invariance ratio, epsilon and bound in the
/// combinatorial layer is compared through this type; no floating point.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num, den);
}

/// Parses "a", "a/b" or a decimal like "0.25" exactly.
Rational parse_rational(const std::string& text);

/// Canonical "a/b" (or "a") form, used in reports.
std::string rational_to_string(const Rational& r);

inline double rational_to_double(const Rational& r) {
  return static_cast<double>(r);
}

inline Rational rational_pow(const Rational& base, int exp) {
  Rational acc(1);
  Rational b = base;
  int e = exp;
  if (e < 0) {
    if (base == 0) throw std::domain_error("0^negative");
    b = Rational(denominator(base), numerator(base));
    e = -e;
  }
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

/// 2^e as an exact rational, e may be negative.
inline Rational pow2(int e) { return rational_pow(Rational(2), e); }

}  // namespace folner
