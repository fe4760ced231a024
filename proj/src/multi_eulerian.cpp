#include "alcove/multi_eulerian.hpp"

#include <algorithm>

#include "alcove/alcoved.hpp"
#include "alcove/errors.hpp"

namespace alcove {

namespace {

Int slice_by_sorted_subsets(const WeightedSetPartition& p, int k) {
  Matroid m;
  try {
    m = wsp_bases(p, k);
  } catch (const EmptyMatroidError&) {
    return 0;
  }
  if (polytope_dimension(m) < p.n() - 1) return 0;
  return matroid_volume(m);
}

Int slice_by_descent_words(const WeightedSetPartition& p, int k) {
  const int n = p.n();
  std::vector<std::size_t> positions;
  int end = 0;
  for (std::size_t j = 0; j + 1 < p.parts.size(); ++j) {
    end += p.parts[j];
    positions.push_back(static_cast<std::size_t>(end));
  }
  Int count = 0;
  for_each_permutation(n - 1, [&](const Permutation& w) {
    if (descent_count(w) != k - 1) return;
    std::vector<int> sub;
    for (std::size_t pos : positions) sub.push_back(w(static_cast<int>(pos)));
    if (descent_count(std::span<const int>(sub)) == k - 1) ++count;
  });
  return count;
}

}  // namespace

IntPolynomial multi_eulerian_polynomial(const WeightedSetPartition& p, MultiEulerianMethod method) {
  const int n = p.n();
  if (n < 2) throw ArgumentError("multi-Eulerian polynomial needs n >= 2");
  if (method == MultiEulerianMethod::descent_word && !p.is_unweighted())
    throw MethodDomainError("descent-word method requires b = 0 and c = 1");
  IntPolynomial out;
  for (int k = 1; k < n; ++k) {
    Int v = 0;
    switch (method) {
      case MultiEulerianMethod::descent_word:
        v = slice_by_descent_words(p, k);
        break;
      case MultiEulerianMethod::sorted_subsets:
        v = slice_by_sorted_subsets(p, k);
        break;
      case MultiEulerianMethod::alcoved_volume:
        v = volume(wsp_spec(p, k), VolumeMethod::circuit);
        break;
    }
    out.add_term(k, v);
  }
  return out;
}

WeightedSetPartition starred(const WeightedSetPartition& p) {
  auto parts = p.parts;
  auto b = p.b;
  auto c = p.c;
  parts.push_back(1);
  b.push_back(0);
  c.push_back(1);
  return WeightedSetPartition(std::move(parts), std::move(b), std::move(c));
}

WeightedAtOne weighted_at_one(const WeightedSetPartition& p) {
  WeightedAtOne out;
  out.enumerated = multi_eulerian_polynomial(starred(p), MultiEulerianMethod::alcoved_volume).evaluate(1);
  out.closed_form = multinomial(p.parts);
  for (std::size_t j = 0; j < p.parts.size(); ++j) {
    Int sum = 0;
    for (int i = p.b[j] + 1; i <= p.c[j]; ++i) sum = checked_add(sum, eulerian_number(i, p.parts[j]));
    out.closed_form = checked_mul(out.closed_form, sum);
  }
  return out;
}

std::pair<IntPolynomial, IntPolynomial> derivative_identity_sides(int m) {
  if (m < 1) throw ArgumentError("derivative identity needs m >= 1");
  IntPolynomial left;
  for_each_permutation(m, [&](const Permutation& w) { left.add_term(descent_count(w) + 1, w(1)); });
  IntPolynomial right = eulerian_polynomial(m).derivative().shifted(1);
  return {left, right};
}

bool derivative_identity(int m) {
  auto [left, right] = derivative_identity_sides(m);
  return left == right;
}

IntPolynomial hook_formula(int a, int n) {
  if (a < 1 || a > n) throw ArgumentError("hook formula needs 1 <= a <= n");
  IntPolynomial out;
  if (a == n) return out;
  for_each_permutation(n - a, [&](const Permutation& w) {
    out.add_term(descent_count(w) + 1, binomial(a + w(1) - 2, a - 1));
  });
  return out;
}

MarkedPermutation::MarkedPermutation(Permutation u_, int mark_) : u(std::move(u_)), mark(mark_) {
  const int m = u.size();
  if (m < 2) throw ArgumentError("marked permutation needs m >= 2");
  if (u(m) != m) throw ArgumentError("marked permutation must end in its largest value");
  if (mark < 1 || mark > m) throw ArgumentError("mark outside [1..m]");
  const int next = mark == m ? u(1) : u(mark + 1);
  if (u(mark) < next) throw ArgumentError("mark is not a circular descent");
}

Permutation marked_descent_bijection(const MarkedPermutation& marked) {
  const Permutation& u = marked.u;
  const int m = u.size();
  const int top = m + 1;
  std::vector<int> v = u.one_line();
  v.insert(v.begin() + marked.mark, top);
  const int shift = top - u(marked.mark);
  for (auto& x : v) x = (x + shift - 1) % top + 1;
  auto last = std::find(v.begin(), v.end(), top);
  std::rotate(v.begin(), last + 1, v.end());
  return Permutation(std::move(v));
}

MarkedPermutation marked_descent_inverse(const Permutation& w) {
  const int top = w.size();
  if (top < 3 || w(top) != top || !(w(1) < w(2)))
    throw ArgumentError("inverse needs w ending in its largest value with w_1 < w_2");
  const int shift = w(1);
  std::vector<int> v = w.one_line();
  for (auto& x : v) x = ((x - shift - 1) % top + top) % top + 1;
  // The inserted value sits first; the cyclic word after it is u starting at u_{i+1}.
  auto inserted = std::find(v.begin(), v.end(), top);
  std::rotate(v.begin(), inserted, v.end());
  std::vector<int> u(v.begin() + 1, v.end());
  const int m = top - 1;
  auto largest = std::find(u.begin(), u.end(), m);
  const auto offset = static_cast<int>(u.end() - (largest + 1));
  std::rotate(u.begin(), largest + 1, u.end());
  // Before the rotation the predecessor of the inserted value was u.back().
  int mark = (m - 1 + offset) % m + 1;
  return MarkedPermutation(Permutation(std::move(u)), mark);
}

}  // namespace alcove
