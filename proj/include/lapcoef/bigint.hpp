#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "lapcoef/errors.hpp"

namespace lapcoef {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt ipow(const BigInt& base, std::uint64_t e) {
  BigInt r = 1;
  BigInt b = base;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

/// Divides in place, throwing if the division leaves a remainder.
inline void divide_exact(BigInt& value, const BigInt& divisor, const char* what) {
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(value, divisor, q, r);
  if (r != 0) throw InvariantError(std::string("inexact division in ") + what);
  value = std::move(q);
}

/// x = mantissa * 2^exponent with mantissa in [0.5, 1), built from the top
/// 64 bits of a positive big integer.
struct ScaledDouble {
  double mantissa = 0.0;
  std::int64_t exponent = 0;
};

inline ScaledDouble decompose(const BigInt& x) {
  if (x <= 0) throw InvariantError("decompose: non-positive argument");
  const std::int64_t bits = static_cast<std::int64_t>(boost::multiprecision::msb(x)) + 1;
  std::int64_t shift = bits > 64 ? bits - 64 : 0;
  const auto top = static_cast<std::uint64_t>(shift > 0 ? BigInt(x >> shift) : x);
  int e = 0;
  const double m = std::frexp(static_cast<double>(top), &e);
  return {m, shift + e};
}

/// Natural logarithm of a positive big integer.
inline double log_big(const BigInt& x) {
  const auto d = decompose(x);
  return std::log(d.mantissa) + static_cast<double>(d.exponent) * std::log(2.0);
}

/// num / den as a double without converting either operand (both may exceed
/// the double range). Underflows gracefully to 0.
inline double ratio(const BigInt& num, const BigInt& den) {
  if (num == 0) return 0.0;
  const auto a = decompose(num);
  const auto b = decompose(den);
  const std::int64_t e = a.exponent - b.exponent;
  if (e < -2000) return 0.0;
  if (e > 2000) return HUGE_VAL;
  return std::ldexp(a.mantissa / b.mantissa, static_cast<int>(e));
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace lapcoef
