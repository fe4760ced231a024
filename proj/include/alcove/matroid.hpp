#pragma once

#include <utility>
#include <vector>

#include "alcove/alcoved.hpp"
#include "alcove/core.hpp"

namespace alcove {

/// A base collection of k-subsets of [n], lexicographically sorted.
/// Construction does not check the exchange axiom; see is_matroid.
struct Matroid {
  int n = 0;
  int k = 0;
  std::vector<Multiset> bases;

  static Matroid from_bases(std::vector<Multiset> bases, int n);
};

/// Consecutive blocks Pi(a_1, ..., a_r) of [n] with cardinality bounds
/// b_j <= |I cap pi_j| <= c_j.
struct WeightedSetPartition {
  std::vector<int> parts;
  std::vector<int> b;
  std::vector<int> c;

  WeightedSetPartition() = default;
  WeightedSetPartition(std::vector<int> parts_, std::vector<int> b_, std::vector<int> c_);

  // b = 0, c = 1 on every part.
  static WeightedSetPartition unweighted(std::vector<int> parts);

  int n() const;
  bool is_unweighted() const;
  // Index of the part holding element e of [n].
  int part_of(int e) const;
  // First element of part j (1-based elements, 0-based parts).
  int part_start(std::size_t j) const;

  bool operator==(const WeightedSetPartition&) const = default;
};

Matroid wsp_bases(const WeightedSetPartition& p, int k);

/// Same polytope as the base polytope of wsp_bases(p, k), as an alcoved spec.
AlcovedSpec wsp_spec(const WeightedSetPartition& p, int k);

std::pair<WeightedSetPartition, int> wsp_dual(const WeightedSetPartition& p, int k);

/// Cyclic intervals [start..end] of [n]; start > end wraps past n.
struct CyclicIntervalSystem {
  int n = 0;
  std::vector<std::pair<int, int>> intervals;

  std::vector<int> members(std::size_t s) const;
};

Matroid transversal_bases(const CyclicIntervalSystem& s);
// True iff some assignment of distinct interval indices covers the subset.
bool has_transversal(const CyclicIntervalSystem& s, const Multiset& subset);

bool is_matroid(const std::vector<Multiset>& bases);
bool is_sort_closed(const std::vector<Multiset>& bases);
int polytope_dimension(const Matroid& m);
// Sorted subsets of size dim + 1; throws NotSortClosedError otherwise.
Int matroid_volume(const Matroid& m);

/// Non-negative mu with sum(mu) = sum(lambda) whose decreasing rearrangement
/// is dominated by that of lambda. Lexicographically sorted.
std::vector<Point> weight_polytope_points(const Point& lambda);

bool weight_sort_closed_by_points(const Point& lambda);
/// Closed form: after subtracting min(lambda) from every entry, the decreasing
/// rearrangement is (p, ..., p, q, 0, ..., 0) with 0 <= q <= p, i.e.
/// lambda = a w_i + b w_{i+1} up to a multiple of (1, ..., 1).
bool weight_sort_closed_by_shape(const Point& lambda);

}  // namespace alcove
