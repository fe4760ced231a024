#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "alcove/core.hpp"

namespace alcove {

/// A product x_{I_1} ... x_{I_d} of variables indexed by multisets of a
/// common size over a common [n]. Factors are kept in lexicographic order.
class Monomial {
 public:
  explicit Monomial(std::vector<Multiset> factors);

  const std::vector<Multiset>& factors() const { return factors_; }
  std::size_t degree() const { return factors_.size(); }
  std::size_t k() const { return factors_[0].size(); }
  int n() const { return factors_[0].n(); }

  // Concatenated factor elements, sorted.
  std::vector<int> content() const;
  // "x12*x34", or "x{1,10}*x{2,11}" when n > 9.
  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Multiset> factors_;
};

/// Leading term x_I x_J (an unsorted pair) and trailing term x_U x_V.
struct MarkedBinomial {
  Monomial leading;
  Monomial trailing;

  std::string to_string() const { return leading.to_string() + " - " + trailing.to_string(); }
  auto operator<=>(const MarkedBinomial&) const = default;
};

struct Reduction {
  Monomial result;
  std::size_t steps = 0;
};

/// Picks which unsorted pair to rewrite next, given how many there are.
using PairChooser = std::function<std::size_t(std::size_t candidates)>;

/// Rewrites unsorted pairs x_I x_J -> x_U x_V until the monomial is sorted.
/// Candidate pairs (a, b), a < b, are listed in lexicographic order of the
/// current factor list; the default chooser takes the first. Throws
/// NotSortClosedError if some U or V leaves the ground collection.
Reduction reduce_to_normal_form(const Monomial& m, const std::set<Multiset>& ground, const PairChooser& choose = {});

Monomial normal_form(const Monomial& m, const std::vector<Multiset>& ground);

// Sorted union dealt round-robin into degree factors.
Monomial dealt_normal_form(const Monomial& m);

bool is_standard(const Monomial& m, const std::vector<Multiset>& ground);

std::vector<MarkedBinomial> groebner_generators(const std::vector<Multiset>& ground);

bool same_toric_fiber(const Monomial& a, const Monomial& b);

}  // namespace alcove
