#include "alcove/matroid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "alcove/errors.hpp"
#include "alcove/geometry.hpp"
#include "alcove/hypersimplex.hpp"

namespace alcove {

Matroid Matroid::from_bases(std::vector<Multiset> bases, int n) {
  if (bases.empty()) throw EmptyMatroidError("matroid has no bases");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const std::size_t k = bases[0].size();
  for (const auto& b : bases)
    if (b.size() != k || b.n() != n || !b.is_set()) throw ArgumentError("bases must be k-subsets of a common [n]");
  return Matroid{n, static_cast<int>(k), std::move(bases)};
}

WeightedSetPartition::WeightedSetPartition(std::vector<int> parts_, std::vector<int> b_, std::vector<int> c_)
    : parts(std::move(parts_)), b(std::move(b_)), c(std::move(c_)) {
  if (parts.empty()) throw ArgumentError("partition needs at least one part");
  if (b.size() != parts.size() || c.size() != parts.size())
    throw ArgumentError("b and c need one entry per part");
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j] < 1) throw ArgumentError("part sizes must be positive");
    if (!(0 <= b[j] && b[j] <= c[j] && c[j] <= parts[j]))
      throw ArgumentError("part " + std::to_string(j + 1) + " violates 0 <= b <= c <= size");
  }
}

WeightedSetPartition WeightedSetPartition::unweighted(std::vector<int> parts) {
  std::vector<int> zeros(parts.size(), 0), ones(parts.size(), 1);
  return WeightedSetPartition(std::move(parts), std::move(zeros), std::move(ones));
}

int WeightedSetPartition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool WeightedSetPartition::is_unweighted() const {
  return std::all_of(b.begin(), b.end(), [](int x) { return x == 0; }) &&
         std::all_of(c.begin(), c.end(), [](int x) { return x == 1; });
}

int WeightedSetPartition::part_of(int e) const {
  int end = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    end += parts[j];
    if (e <= end) return static_cast<int>(j);
  }
  throw ArgumentError("element outside the partition");
}

int WeightedSetPartition::part_start(std::size_t j) const {
  return 1 + std::accumulate(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(j), 0);
}

Matroid wsp_bases(const WeightedSetPartition& p, int k) {
  const int n = p.n();
  if (!(0 < k && k < n)) throw ArgumentError("wsp_bases requires 0 < k < n");
  std::vector<Multiset> bases;
  for (const auto& s : all_subsets(n, k)) {
    std::vector<int> hits(p.parts.size(), 0);
    for (int e : s.elements()) ++hits[static_cast<std::size_t>(p.part_of(e))];
    bool ok = true;
    for (std::size_t j = 0; j < hits.size() && ok; ++j) ok = p.b[j] <= hits[j] && hits[j] <= p.c[j];
    if (ok) bases.push_back(s);
  }
  if (bases.empty()) throw EmptyMatroidError("no k-subset satisfies the part constraints");
  return Matroid::from_bases(std::move(bases), n);
}

AlcovedSpec wsp_spec(const WeightedSetPartition& p, int k) {
  const int n = p.n();
  if (!(0 < k && k < n)) throw ArgumentError("wsp_spec requires 0 < k < n");
  AlcovedSpec::BoundMap bounds;
  auto meet = [&](int i, int j, Int lo, Int hi) {
    Bound& b = bounds[{i, j}];
    b.lo = b.lo ? std::max(*b.lo, lo) : lo;
    b.hi = b.hi ? std::min(*b.hi, hi) : hi;
  };
  int s = 0;
  for (std::size_t j = 0; j < p.parts.size(); ++j) {
    const int e = s + p.parts[j];
    if (e <= n - 1) {
      meet(s, e, p.b[j], p.c[j]);
    } else if (s >= 1) {
      // x_{s+1} + ... + x_n = k - z_s.
      meet(0, s, k - p.c[j], k - p.b[j]);
    } else if (k < p.b[j] || k > p.c[j]) {
      meet(0, 1, 1, 0);
    }
    s = e;
  }
  return AlcovedSpec(n, k, std::move(bounds), true);
}

std::pair<WeightedSetPartition, int> wsp_dual(const WeightedSetPartition& p, int k) {
  std::vector<int> b(p.parts.size()), c(p.parts.size());
  for (std::size_t j = 0; j < p.parts.size(); ++j) {
    b[j] = p.parts[j] - p.c[j];
    c[j] = p.parts[j] - p.b[j];
  }
  return {WeightedSetPartition(p.parts, std::move(b), std::move(c)), p.n() - k};
}

std::vector<int> CyclicIntervalSystem::members(std::size_t s) const {
  auto [start, end] = intervals[s];
  std::vector<int> out;
  for (int e = start;; e = e % n + 1) {
    out.push_back(e);
    if (e == end) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_transversal(const CyclicIntervalSystem& s, const Multiset& subset) {
  const std::size_t k = s.intervals.size();
  if (subset.size() != k) return false;
  std::vector<std::vector<bool>> allowed(k, std::vector<bool>(k, false));
  for (std::size_t iv = 0; iv < k; ++iv) {
    auto m = s.members(iv);
    for (std::size_t e = 0; e < k; ++e) allowed[e][iv] = std::binary_search(m.begin(), m.end(), subset[e]);
  }
  std::vector<int> owner(k, -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t e, std::vector<bool>& seen) {
    for (std::size_t iv = 0; iv < k; ++iv) {
      if (!allowed[e][iv] || seen[iv]) continue;
      seen[iv] = true;
      if (owner[iv] < 0 || augment(static_cast<std::size_t>(owner[iv]), seen)) {
        owner[iv] = static_cast<int>(e);
        return true;
      }
    }
    return false;
  };
  for (std::size_t e = 0; e < k; ++e) {
    std::vector<bool> seen(k, false);
    if (!augment(e, seen)) return false;
  }
  return true;
}

Matroid transversal_bases(const CyclicIntervalSystem& s) {
  const int n = s.n;
  const int k = static_cast<int>(s.intervals.size());
  if (n < 1) throw ArgumentError("interval system needs n >= 1");
  if (k < 1) throw ArgumentError("interval system needs at least one interval");
  for (auto [a, b] : s.intervals)
    if (a < 1 || a > n || b < 1 || b > n) throw ArgumentError("interval endpoint outside [1..n]");
  if (k > n) throw EmptyMatroidError("more intervals than elements");
  std::vector<Multiset> bases;
  for (const auto& subset : all_subsets(n, k))
    if (has_transversal(s, subset)) bases.push_back(subset);
  if (bases.empty()) throw EmptyMatroidError("intervals admit no system of distinct representatives");
  return Matroid::from_bases(std::move(bases), n);
}

bool is_matroid(const std::vector<Multiset>& bases) {
  if (bases.empty()) return false;
  std::set<Multiset> present(bases.begin(), bases.end());
  for (const auto& b : bases)
    if (b.size() != bases[0].size() || b.n() != bases[0].n() || !b.is_set()) return false;
  const int n = bases[0].n();
  for (const auto& I : present)
    for (const auto& J : present) {
      if (I == J) continue;
      for (int i : I.elements()) {
        if (std::binary_search(J.elements().begin(), J.elements().end(), i)) continue;
        bool exchanged = false;
        for (int j : J.elements()) {
          if (std::binary_search(I.elements().begin(), I.elements().end(), j)) continue;
          std::vector<int> swapped;
          for (int x : I.elements())
            if (x != i) swapped.push_back(x);
          swapped.push_back(j);
          std::sort(swapped.begin(), swapped.end());
          if (present.contains(Multiset(std::move(swapped), n))) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) return false;
      }
    }
  return true;
}

bool is_sort_closed(const std::vector<Multiset>& bases) {
  std::set<Multiset> present(bases.begin(), bases.end());
  for (auto a = present.begin(); a != present.end(); ++a)
    for (auto b = std::next(a); b != present.end(); ++b) {
      auto [u, v] = sort_pair(*a, *b);
      if (!present.contains(u) || !present.contains(v)) return false;
    }
  return true;
}

int polytope_dimension(const Matroid& m) {
  std::vector<Point> points;
  for (const auto& b : m.bases) points.push_back(indicator(b));
  return affine_rank(points);
}

Int matroid_volume(const Matroid& m) {
  if (!is_sort_closed(m.bases)) throw NotSortClosedError("matroid is not sort-closed");
  return count_sorted_subsets(m.bases, static_cast<std::size_t>(polytope_dimension(m) + 1));
}

std::vector<Point> weight_polytope_points(const Point& lambda) {
  for (Int x : lambda)
    if (x < 0) throw ArgumentError("weight entries must be non-negative");
  const std::size_t n = lambda.size();
  if (n == 0) return {};
  Point top = lambda;
  std::sort(top.rbegin(), top.rend());
  std::vector<Int> bound(n);
  std::partial_sum(top.begin(), top.end(), bound.begin());
  const Int total = bound.back();
  std::vector<Point> out;
  Point mu(n, 0);
  std::function<void(std::size_t, Int)> fill = [&](std::size_t i, Int left) {
    if (i + 1 == n) {
      mu[i] = left;
      Point sorted = mu;
      std::sort(sorted.rbegin(), sorted.rend());
      Int run = 0;
      for (std::size_t t = 0; t < n; ++t) {
        run += sorted[t];
        if (run > bound[t]) return;
      }
      out.push_back(mu);
      return;
    }
    // No entry of a dominated weight exceeds the largest entry of lambda.
    for (Int v = 0; v <= std::min(left, top[0]); ++v) {
      mu[i] = v;
      fill(i + 1, left - v);
    }
  };
  fill(0, total);
  std::sort(out.begin(), out.end());
  return out;
}

bool weight_sort_closed_by_points(const Point& lambda) { return is_sort_closed_points(weight_polytope_points(lambda)); }

bool weight_sort_closed_by_shape(const Point& lambda) {
  for (Int x : lambda)
    if (x < 0) throw ArgumentError("weight entries must be non-negative");
  if (lambda.empty()) return true;
  Point v = lambda;
  const Int low = *std::min_element(v.begin(), v.end());
  for (auto& x : v) x -= low;
  std::sort(v.rbegin(), v.rend());
  const Int p = v[0];
  std::size_t i = 0;
  while (i < v.size() && v[i] == p) ++i;
  // At most one entry strictly between 0 and p, then zeros.
  if (i < v.size() && v[i] != 0) ++i;
  for (; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

}  // namespace alcove
