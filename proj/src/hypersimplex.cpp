#include "alcove/hypersimplex.hpp"

#include <algorithm>
#include <set>

#include "alcove/alcoved.hpp"
#include "alcove/errors.hpp"

namespace alcove {

HypersimplexId::HypersimplexId(int k_, int n_) : k(k_), n(n_) {
  if (!(0 < k && k < n)) throw ArgumentError("hypersimplex requires 0 < k < n");
  if (n > 30) throw ArgumentError("hypersimplex supports n <= 30");
}

Point indicator(const Multiset& subset) { return subset.counts(); }

std::vector<Point> hypersimplex_vertices(const HypersimplexId& id) {
  std::vector<Point> out;
  for (const auto& s : all_subsets(id.n, id.k)) out.push_back(indicator(s));
  std::sort(out.begin(), out.end());
  return out;
}

static Circuit rotate_to_lex_max(std::vector<Point> vertices, std::vector<int> labels) {
  auto top = std::max_element(vertices.begin(), vertices.end());
  auto shift = top - vertices.begin();
  std::rotate(vertices.begin(), top, vertices.end());
  std::rotate(labels.begin(), labels.begin() + shift, labels.end());
  return Circuit{std::move(vertices), std::move(labels)};
}

Circuit circuit_of_cycle(const LongCycle& c, int k) {
  const Permutation& w = c.canonical();
  const int n = w.size();
  HypersimplexId id(k, n);
  const Permutation pos = w.inverse();
  if (descent_count(pos) != k - 1)
    throw InvalidCycleError("cycle " + w.word() + " has " + std::to_string(descent_count(pos)) +
                            " inverse descents, expected " + std::to_string(k - 1));
  // Before the sweep, position b holds a 1 exactly when label b fires before
  // label b-1, i.e. the 1 arriving from b-1 has not been pushed on yet.
  Point start(static_cast<std::size_t>(n), 0);
  start[0] = 1;
  for (int b = 2; b <= n; ++b) start[static_cast<std::size_t>(b - 1)] = pos(b) < pos(b - 1) ? 1 : 0;
  std::vector<Point> vertices{start};
  for (int t = 1; t < n; ++t) {
    const Point& v = vertices.back();
    int label = w(t);
    if (v[static_cast<std::size_t>(label - 1)] != 1 || v[static_cast<std::size_t>(label % n)] != 0)
      throw InvalidCycleError("label " + std::to_string(label) + " does not move a 1 in cycle " + w.word());
    vertices.push_back(move_along(v, label));
  }
  return rotate_to_lex_max(std::move(vertices), w.one_line());
}

std::vector<Circuit> enumerate_minimal_circuits(const HypersimplexId& id) {
  auto points = hypersimplex_vertices(id);
  auto circuits = minimal_circuits(std::set<Point>(points.begin(), points.end()));
  std::sort(circuits.begin(), circuits.end(),
            [](const Circuit& a, const Circuit& b) { return a.cycle() < b.cycle(); });
  return circuits;
}

Simplex stanley_simplex(const Permutation& w, int k) {
  const int m = w.size();
  const int n = m + 1;
  HypersimplexId id(k, n);
  const Permutation winv = w.inverse();
  if (descent_count(winv) != k - 1)
    throw InvalidCycleError("permutation " + w.word() + " has " + std::to_string(descent_count(winv)) +
                            " inverse descents, expected " + std::to_string(k - 1));
  std::vector<Point> vertices;
  std::vector<int> y(static_cast<std::size_t>(m) + 1, 1);
  for (int r = 0; r < n; ++r) {
    if (r > 0) y[static_cast<std::size_t>(w(r))] = 0;
    Point x(static_cast<std::size_t>(n), 0);
    x[0] = y[1];
    Int total = x[0];
    for (int i = 1; i < m; ++i) {
      x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i + 1)] - y[static_cast<std::size_t>(i)] +
                                       (winv(i + 1) < winv(i) ? 1 : 0);
      total += x[static_cast<std::size_t>(i)];
    }
    x[static_cast<std::size_t>(n - 1)] = k - total;
    vertices.push_back(std::move(x));
  }
  return Simplex(std::move(vertices));
}

std::vector<std::vector<Multiset>> enumerate_sorted_collections(const HypersimplexId& id, bool maximal_only) {
  auto ground = all_subsets(id.n, id.k);
  return sorted_subsets(ground, maximal_only ? static_cast<std::size_t>(id.n) : 0);
}

Permutation firing_times(const std::vector<Multiset>& collection) {
  if (collection.empty()) throw ArgumentError("theta of an empty collection");
  const int n = collection[0].n();
  const std::size_t k = collection[0].size();
  if (static_cast<int>(collection.size()) != n) throw ArgumentError("theta requires a maximal collection of n subsets");
  for (const auto& s : collection) {
    if (s.n() != n || s.size() != k || !s.is_set()) throw ArgumentError("theta requires k-subsets of a common [n]");
  }
  std::vector<Multiset> ordered = collection;
  std::sort(ordered.begin(), ordered.end());
  if (std::adjacent_find(ordered.begin(), ordered.end()) != ordered.end())
    throw ArgumentError("theta requires distinct subsets");
  if (!is_sorted_chain(ordered)) throw ArgumentError("theta requires a sorted collection");
  std::vector<int> all;
  for (const auto& s : ordered) all.insert(all.end(), s.elements().begin(), s.elements().end());
  std::sort(all.begin(), all.end());
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    auto last = std::upper_bound(all.begin(), all.end(), i);
    if (last == all.begin() || *(last - 1) != i) throw ArgumentError("collection misses the value " + std::to_string(i));
    int alpha = static_cast<int>(last - all.begin());
    w[static_cast<std::size_t>(i - 1)] = alpha % n;
  }
  w[static_cast<std::size_t>(n - 1)] = n;
  try {
    return Permutation(std::move(w));
  } catch (const ArgumentError&) {
    throw ArgumentError("collection does not span a cell");
  }
}

Permutation theta(const std::vector<Multiset>& collection) { return firing_times(collection).inverse(); }

std::vector<Simplex> triangulate(const HypersimplexId& id, HypersimplexMethod method) {
  std::vector<Simplex> cells;
  switch (method) {
    case HypersimplexMethod::stanley:
      for_each_permutation(id.n - 1, [&](const Permutation& w) {
        if (descent_count(w.inverse()) == id.k - 1) cells.push_back(stanley_simplex(w, id.k));
      });
      break;
    case HypersimplexMethod::sorted:
      for (const auto& c : enumerate_sorted_collections(id, true)) {
        std::vector<Point> vs;
        for (const auto& s : c) vs.push_back(indicator(s));
        cells.emplace_back(std::move(vs));
      }
      break;
    case HypersimplexMethod::circuit:
      for (const auto& c : enumerate_minimal_circuits(id)) cells.push_back(c.simplex());
      break;
    case HypersimplexMethod::alcove:
      for (const auto& a : alcoves(AlcovedSpec::hypersimplex(id.k, id.n))) cells.push_back(alcove_simplex(a));
      break;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::string hypersimplex_cell_label(const Simplex& cell) {
  std::vector<Multiset> collection;
  for (const auto& v : cell.vertices) collection.push_back(Multiset::from_counts(v));
  return theta(collection).word();
}

bool are_adjacent(const LongCycle& u, const LongCycle& w) {
  if (u.size() != w.size()) throw ArgumentError("cycles of different lengths");
  if (descent_count(u.canonical().inverse()) != descent_count(w.canonical().inverse()))
    throw ArgumentError("cycles label cells of different hypersimplices");
  if (u == w) return false;
  const int n = u.size();
  const auto& word = u.canonical().one_line();
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    int diff = ((word[static_cast<std::size_t>(i)] - word[static_cast<std::size_t>(j)]) % n + n) % n;
    if (diff == 1 || diff == n - 1) continue;
    std::vector<int> swapped = word;
    std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(j)]);
    if (LongCycle(Permutation(std::move(swapped))) == w) return true;
  }
  return false;
}

DualGraph dual_graph(const HypersimplexId& id) {
  std::vector<LongCycle> cycles;
  for (const auto& c : enumerate_minimal_circuits(id)) cycles.push_back(c.cycle());
  std::sort(cycles.begin(), cycles.end(), [](const LongCycle& a, const LongCycle& b) { return a.word() < b.word(); });
  std::vector<std::string> labels;
  for (const auto& c : cycles) labels.push_back(c.word());
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < cycles.size(); ++a)
    for (std::size_t b = a + 1; b < cycles.size(); ++b)
      if (are_adjacent(cycles[a], cycles[b])) edges.emplace_back(a, b);
  return make_dual_graph(std::move(labels), std::move(edges));
}

}  // namespace alcove
