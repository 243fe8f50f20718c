#pragma once

#include <cstdint>
#include <numeric>

#include "mildem/error.hpp"

namespace mildem {

/// Elements of ω = {1, 2, 3, ...} and the integer arithmetic around them.
using Int = std::int64_t;

// Periods beyond this are rejected rather than materialized.
inline constexpr Int kMaxPeriod = Int{1} << 22;

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_mod(Int a, Int b) { return a - b * floor_div(a, b); }

inline Int checked_lcm(Int a, Int b) {
  Int l = std::lcm(a, b);
  if (l <= 0 || l > kMaxPeriod) fail(ErrorKind::Overflow, "period lcm exceeds limit");
  return l;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow");
  return r;
}

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow");
  return r;
}

}  // namespace mildem
