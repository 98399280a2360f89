#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "abelmod/core/error.hpp"

namespace abelmod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidInput("zero denominator");
  return Rational(num, den);
}

/// Parses "a", "-a" or "a/b".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw InvalidInput("malformed rational: '" + text + "'");
  }
}

inline std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw InternalError("int64 overflow in multiplication");
  return out;
}

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw InternalError("int64 overflow in addition");
  return out;
}

/// Floor-mod with a nonnegative result for positive modulus.
inline int64_t mod_floor(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline BigInt binomial(const BigInt& n, int64_t k) {
  if (k < 0) return 0;
  BigInt out = 1;
  for (int64_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

inline BigInt factorial(int64_t n) {
  BigInt out = 1;
  for (int64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace abelmod
