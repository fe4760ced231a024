#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alcove/arith.hpp"
#include "alcove/polynomial.hpp"

namespace alcove {

using Point = std::vector<Int>;

/// A multiset of elements of [1..n], stored as a weakly increasing list.
///
/// k-subsets are the multisets without repeats (see make_subset). A lattice
/// point a with non-negative coordinates corresponds to the multiset I_a with
/// a_i copies of i, via from_counts / counts.
class Multiset {
 public:
  Multiset() = default;
  Multiset(std::vector<int> elements, int n);

  static Multiset from_counts(std::span<const Int> counts);

  int n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<int>& elements() const { return elements_; }
  int operator[](std::size_t i) const { return elements_[i]; }

  bool is_set() const;
  // Multiplicity vector of length n.
  Point counts() const;
  // Compact form: "{1,2,4,5}".
  std::string to_string() const;
  // Digits only ("1245") when n <= 9, otherwise the braced form.
  std::string label() const;

  auto operator<=>(const Multiset&) const = default;

 private:
  std::vector<int> elements_;
  int n_ = 0;
};

// Validates strict increase as well as range.
Multiset make_subset(std::vector<int> elements, int n);

// All k-subsets of [n] in lexicographic order.
std::vector<Multiset> all_subsets(int n, int k);

/// Returns (U(I,J), V(I,J)): the odd- and even-indexed entries of sort(I u J).
std::pair<Multiset, Multiset> sort_pair(const Multiset& I, const Multiset& J);

/// True iff i_1 <= j_1 <= i_2 <= j_2 <= ... <= i_k <= j_k.
bool is_sorted_pair(const Multiset& I, const Multiset& J);

/// True iff every ordered pair (I_a, I_b), a < b, of the collection is sorted.
bool is_sorted_chain(std::span<const Multiset> collection);

/// Sorted sub-collections of a ground collection.
///
/// The ground is taken in lexicographic order; each returned collection is a
/// lexicographically ordered list of ground members that is a sorted chain.
/// When size is nonzero only collections of exactly that size are produced.
std::vector<std::vector<Multiset>> sorted_subsets(std::span<const Multiset> ground, std::size_t size);
// Number of sorted sub-collections with exactly `size` members.
Int count_sorted_subsets(std::span<const Multiset> ground, std::size_t size);
// Counts of all non-empty sorted sub-collections, indexed by size (index 0 unused).
std::vector<Int> sorted_subset_profile(std::span<const Multiset> ground);

/// A permutation of [1..m] in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int m);
  // Accepts "2134" (single digits) or "2,1,3,4".
  static Permutation parse(std::string_view word);

  int size() const { return static_cast<int>(one_line_.size()); }
  // 1-based access: w(i) = w_i.
  int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return one_line_; }

  Permutation inverse() const;
  // Digits concatenated when m <= 9, otherwise comma separated.
  std::string word() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> one_line_;
};

// S_m in lexicographic order.
std::vector<Permutation> all_permutations(int m);
// Visits S_m in lexicographic order without materializing it.
void for_each_permutation(int m, const std::function<void(const Permutation&)>& visit);

int descent_count(std::span<const int> word);
int descent_count(const Permutation& w);
/// Descents plus the wrap position m when w_m > w_1.
int circular_descent_count(const Permutation& w);

/// A_{k,m}: permutations of S_m with k-1 descents.
Int eulerian_number(int k, int m);
/// A_m(t) = sum_k A_{k,m} t^k.
IntPolynomial eulerian_polynomial(int m);

/// A long cycle (w_1, ..., w_m) of S_m, identified with its one-line word
/// modulo cyclic shifts. The canonical representative ends in m.
class LongCycle {
 public:
  explicit LongCycle(const Permutation& any_representative);

  const Permutation& canonical() const { return canonical_; }
  int size() const { return canonical_.size(); }
  std::string word() const { return canonical_.word(); }

  auto operator<=>(const LongCycle&) const = default;

 private:
  Permutation canonical_;
};

LongCycle canonical_cycle(const Permutation& w);

}  // namespace alcove
