#pragma once

#include <utility>

#include "alcove/core.hpp"
#include "alcove/matroid.hpp"
#include "alcove/polynomial.hpp"

namespace alcove {

enum class MultiEulerianMethod { descent_word, sorted_subsets, alcoved_volume };

/// sum_{k=1}^{n-1} Vol(slice k) t^k. Slices of lower dimension count 0.
/// descent_word counts w in S_{n-1} with k-1 descents whose subword at
/// positions a_1, a_1 + a_2, ..., a_1 + ... + a_{r-1} also has k-1 descents;
/// it applies only when b = 0 and c = 1.
IntPolynomial multi_eulerian_polynomial(const WeightedSetPartition& p, MultiEulerianMethod method);

// Appends a part of size one with b = 0, c = 1.
WeightedSetPartition starred(const WeightedSetPartition& p);

/// For p = Pi with (b, c), compares the value at t = 1 of the polynomial of
/// the starred partition against
///   (n; a_1, ..., a_r) * prod_j sum_{i=b_j+1}^{c_j} A_{i,a_j}.
struct WeightedAtOne {
  Int enumerated = 0;
  Int closed_form = 0;
};
WeightedAtOne weighted_at_one(const WeightedSetPartition& p);

/// sum_{w in S_m} w_1 t^{des(w)+1}, and t d/dt A_m(t).
std::pair<IntPolynomial, IntPolynomial> derivative_identity_sides(int m);
bool derivative_identity(int m);

/// sum_{w in S_{n-a}} binom(a + w_1 - 2, a - 1) t^{des(w)+1}.
IntPolynomial hook_formula(int a, int n);

/// u in S_m, m >= 2, with u_m = m and a marked circular descent at index i
/// (u_i > u_{i+1}, indices mod m).
struct MarkedPermutation {
  Permutation u;
  int mark = 0;

  MarkedPermutation(Permutation u_, int mark_);
  auto operator<=>(const MarkedPermutation&) const = default;
};

/// Inserts m+1 after u_i, adds m+1-u_i to every value mod m+1, and rotates
/// m+1 to the end. The image has w_{m+1} = m+1 and w_1 < w_2.
Permutation marked_descent_bijection(const MarkedPermutation& u);
MarkedPermutation marked_descent_inverse(const Permutation& w);

}  // namespace alcove
