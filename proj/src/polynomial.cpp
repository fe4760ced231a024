#include "alcove/polynomial.hpp"

#include <sstream>

namespace alcove {

IntPolynomial IntPolynomial::monomial(int degree, Int coefficient) {
  IntPolynomial p;
  p.add_term(degree, coefficient);
  return p;
}

IntPolynomial IntPolynomial::from_coefficients(const std::vector<Int>& coefficients) {
  IntPolynomial p;
  for (std::size_t d = 0; d < coefficients.size(); ++d) p.add_term(static_cast<int>(d), coefficients[d]);
  return p;
}

Int IntPolynomial::coefficient(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? 0 : it->second;
}

void IntPolynomial::add_term(int degree, Int coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, coefficient);
  if (inserted) return;
  it->second = checked_add(it->second, coefficient);
  if (it->second == 0) terms_.erase(it);
}

int IntPolynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

int IntPolynomial::low_degree() const { return terms_.empty() ? -1 : terms_.begin()->first; }

Int IntPolynomial::evaluate(Int t) const {
  Int result = 0;
  int current = degree();
  // Horner over the dense range.
  for (int d = current; d >= 0; --d) result = checked_add(checked_mul(result, t), coefficient(d));
  return result;
}

IntPolynomial IntPolynomial::derivative() const {
  IntPolynomial p;
  for (auto [d, c] : terms_)
    if (d != 0) p.add_term(d - 1, checked_mul(c, d));
  return p;
}

IntPolynomial IntPolynomial::shifted(int shift) const {
  IntPolynomial p;
  for (auto [d, c] : terms_) p.terms_.emplace(d + shift, c);
  return p;
}

std::vector<Int> IntPolynomial::dense() const {
  std::vector<Int> out(static_cast<std::size_t>(degree() + 1), 0);
  for (auto [d, c] : terms_) out[static_cast<std::size_t>(d)] = c;
  return out;
}

std::string IntPolynomial::to_string(char variable) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [d, c] : terms_) {
    Int magnitude = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (magnitude != 1 || d == 0) os << magnitude;
    if (d >= 1) os << variable;
    if (d >= 2) os << '^' << d;
  }
  return os.str();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  for (auto [d, c] : other.terms_) add_term(d, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  for (auto [d, c] : other.terms_) add_term(d, checked_sub(0, c));
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial p;
  for (auto [da, ca] : a.terms_)
    for (auto [db, cb] : b.terms_) p.add_term(da + db, checked_mul(ca, cb));
  return p;
}

IntPolynomial operator*(Int scalar, const IntPolynomial& p) {
  IntPolynomial out;
  for (auto [d, c] : p.terms_) out.add_term(d, checked_mul(scalar, c));
  return out;
}

}  // namespace alcove
