#pragma once

#include <map>
#include <string>
#include <vector>

#include "alcove/arith.hpp"

namespace alcove {

/// Polynomial in one variable with exact integer coefficients.
///
/// Stored sparsely as degree -> coefficient; zero coefficients are never kept,
/// so two polynomials are equal iff their term maps are equal.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  static IntPolynomial monomial(int degree, Int coefficient);
  // coefficients[d] is the coefficient of t^d.
  static IntPolynomial from_coefficients(const std::vector<Int>& coefficients);

  Int coefficient(int degree) const;
  void add_term(int degree, Int coefficient);

  // -1 for the zero polynomial.
  int degree() const;
  // Lowest degree with a nonzero coefficient; -1 for the zero polynomial.
  int low_degree() const;
  bool is_zero() const { return terms_.empty(); }

  Int evaluate(Int t) const;
  IntPolynomial derivative() const;
  // Multiplies by t^shift.
  IntPolynomial shifted(int shift) const;

  // Dense coefficient vector for degrees 0..degree().
  std::vector<Int> dense() const;
  const std::map<int, Int>& terms() const { return terms_; }

  // Human-readable form, e.g. "t + 4t^2 + t^3".
  std::string to_string(char variable = 't') const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(Int scalar, const IntPolynomial& p);

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::map<int, Int> terms_;
};

}  // namespace alcove
