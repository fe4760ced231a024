#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

namespace alcove {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

// Binomial coefficient; zero outside 0 <= k <= n.
Int binomial(Int n, Int k);

Int factorial(int n);

// n! / (a_1! ... a_r!) with n = sum of parts.
Int multinomial(std::span<const int> parts);

}  // namespace alcove
