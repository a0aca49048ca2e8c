#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "bnlat/errors.hpp"

namespace bnlat {

using Int = std::int64_t;

// Overflow-checked arithmetic. Every matrix and form computation in the
// library goes through these; an overflow is a hard failure, never a wrap.
namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) {
  if (a == std::numeric_limits<Int>::min()) throw OverflowError("integer overflow in negation");
  return -a;
}

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

/// a + b * c
inline Int fma(Int a, Int b, Int c) { return add(a, mul(b, c)); }

}  // namespace checked

/// Floor division; b must be nonzero.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Nonnegative gcd.
inline Int gcd(Int a, Int b) { return std::gcd(checked::abs(a), checked::abs(b)); }

/// Extended gcd: returns g = gcd(a, b) >= 0 with x*a + y*b = g.
struct Bezout {
  Int g;
  Int x;
  Int y;
};

inline Bezout extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = checked::sub(old_r, checked::mul(q, r));
    old_r = r;
    r = tmp;
    tmp = checked::sub(old_s, checked::mul(q, s));
    old_s = s;
    s = tmp;
    tmp = checked::sub(old_t, checked::mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {checked::neg(old_r), checked::neg(old_s), checked::neg(old_t)};
  return {old_r, old_s, old_t};
}

inline bool is_even(Int a) noexcept { return a % 2 == 0; }

}  // namespace bnlat
