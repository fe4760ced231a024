#include "alcove/arith.hpp"

#include <numeric>

#include "alcove/errors.hpp"

namespace alcove {

Int binomial(Int n, Int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    Int g = std::gcd(r, i);
    r = checked_mul(r / g, (n - k + i) / (i / g));
  }
  return r;
}

Int factorial(int n) {
  if (n < 0) throw ArgumentError("factorial of a negative number");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

Int multinomial(std::span<const int> parts) {
  Int r = 1;
  Int total = 0;
  for (int a : parts) {
    if (a < 0) throw ArgumentError("multinomial with a negative part");
    total += a;
    r = checked_mul(r, binomial(total, a));
  }
  return r;
}

}  // namespace alcove
