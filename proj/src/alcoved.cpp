#include "alcove/alcoved.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "alcove/errors.hpp"
#include "alcove/hypersimplex.hpp"
#include "alcove/parallel.hpp"

namespace alcove {

namespace {

constexpr Int kInf = std::numeric_limits<Int>::max() / 4;

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod(Int a, Int n) { return ((a % n) + n) % n; }

void tighten(std::vector<std::vector<Int>>& dist, int i, int j, const Bound& b) {
  auto ui = static_cast<std::size_t>(i);
  auto uj = static_cast<std::size_t>(j);
  if (b.hi) dist[ui][uj] = std::min(dist[ui][uj], *b.hi);
  if (b.lo) dist[uj][ui] = std::min(dist[uj][ui], -*b.lo);
}

}  // namespace

AlcovedSpec::AlcovedSpec(int n, Int level, BoundMap bounds, bool unit_cube)
    : n_(n), level_(level), bounds_(std::move(bounds)), unit_cube_(unit_cube) {
  if (n < 2) throw ArgumentError("alcoved spec requires n >= 2");
  if (n > 30) throw ArgumentError("alcoved spec supports n <= 30");
  const auto un = static_cast<std::size_t>(n);
  dist_.assign(un, std::vector<Int>(un, kInf));
  for (std::size_t i = 0; i < un; ++i) dist_[i][i] = 0;
  for (const auto& [key, b] : bounds_) {
    auto [i, j] = key;
    if (!(0 <= i && i < j && j <= n - 1))
      throw ArgumentError("bound index (" + std::to_string(i) + "," + std::to_string(j) + ") outside 0 <= i < j <= n-1");
    tighten(dist_, i, j, b);
  }
  if (unit_cube_) {
    for (int i = 1; i < n; ++i) tighten(dist_, i - 1, i, Bound{0, 1});
    tighten(dist_, 0, n - 1, Bound{level - 1, level});
  }
  for (std::size_t k = 0; k < un; ++k)
    for (std::size_t i = 0; i < un; ++i) {
      if (dist_[i][k] >= kInf) continue;
      for (std::size_t j = 0; j < un; ++j) {
        if (dist_[k][j] >= kInf) continue;
        dist_[i][j] = std::min(dist_[i][j], dist_[i][k] + dist_[k][j]);
      }
    }
  for (std::size_t i = 0; i < un; ++i)
    if (dist_[i][i] < 0) empty_ = true;
  if (empty_) return;
  for (std::size_t j = 1; j < un; ++j)
    if (dist_[0][j] >= kInf || dist_[j][0] >= kInf)
      throw UnboundedError("alcoved spec is unbounded: z_" + std::to_string(j) + " has no finite " +
                           (dist_[0][j] >= kInf ? "upper" : "lower") + " bound");
}

AlcovedSpec AlcovedSpec::hypersimplex(int k, int n) {
  HypersimplexId id(k, n);
  return AlcovedSpec(id.n, id.k, {}, true);
}

std::pair<Int, Int> AlcovedSpec::effective(int i, int j) const {
  auto ui = static_cast<std::size_t>(i);
  auto uj = static_cast<std::size_t>(j);
  return {-dist_[uj][ui], dist_[ui][uj]};
}

AlcovedSpec AlcovedSpec::translated(Int m) const {
  BoundMap shifted = bounds_;
  if (unit_cube_) {
    auto meet = [&](int i, int j, Int lo, Int hi) {
      Bound& b = shifted[{i, j}];
      b.lo = b.lo ? std::max(*b.lo, lo) : lo;
      b.hi = b.hi ? std::min(*b.hi, hi) : hi;
    };
    for (int i = 1; i < n_; ++i) meet(i - 1, i, 0, 1);
    meet(0, n_ - 1, level_ - 1, level_);
  }
  for (auto& [key, b] : shifted) {
    Int offset = checked_mul(m, key.second - key.first);
    if (b.lo) b.lo = checked_add(*b.lo, offset);
    if (b.hi) b.hi = checked_add(*b.hi, offset);
  }
  return AlcovedSpec(n_, checked_add(level_, checked_mul(m, n_)), std::move(shifted), false);
}

namespace {

// Depth-first walk over z_1..z_{n-1}. With the closed system every partial
// assignment inside its interval extends, so no branch dead-ends.
template <class Visit>
void walk_points(const AlcovedSpec& spec, std::vector<Int>& z, int j, const Visit& visit) {
  const int n = spec.n();
  if (j == n) {
    visit(z);
    return;
  }
  Int lo = std::numeric_limits<Int>::min();
  Int hi = std::numeric_limits<Int>::max();
  for (int i = 0; i < j; ++i) {
    auto [l, h] = spec.effective(i, j);
    lo = std::max(lo, z[static_cast<std::size_t>(i)] + l);
    hi = std::min(hi, z[static_cast<std::size_t>(i)] + h);
  }
  for (Int v = lo; v <= hi; ++v) {
    z[static_cast<std::size_t>(j)] = v;
    walk_points(spec, z, j + 1, visit);
  }
}

Point z_to_x(const std::vector<Int>& z, Int level) {
  const std::size_t n = z.size();
  Point x(n);
  for (std::size_t i = 1; i < n; ++i) x[i - 1] = z[i] - z[i - 1];
  x[n - 1] = level - z[n - 1];
  return x;
}

Int count_points(const AlcovedSpec& spec) {
  if (spec.empty()) return 0;
  std::vector<Int> z(static_cast<std::size_t>(spec.n()), 0);
  Int count = 0;
  walk_points(spec, z, 1, [&](const std::vector<Int>&) { ++count; });
  return count;
}

}  // namespace

std::vector<Point> raw_lattice_points(const AlcovedSpec& spec) {
  if (spec.empty()) return {};
  std::vector<Int> z(static_cast<std::size_t>(spec.n()), 0);
  std::vector<Point> out;
  walk_points(spec, z, 1, [&](const std::vector<Int>& zz) { out.push_back(z_to_x(zz, spec.level())); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> LatticePointSet::original() const {
  std::vector<Point> out = points;
  for (auto& p : out)
    for (auto& c : p) c -= shift;
  return out;
}

static Int normalizing_shift(const std::vector<Point>& points) {
  Int lowest = 0;
  for (const auto& p : points)
    for (Int c : p) lowest = std::min(lowest, c);
  return -lowest;
}

LatticePointSet lattice_points(const AlcovedSpec& spec) {
  LatticePointSet out;
  out.points = raw_lattice_points(spec);
  out.shift = normalizing_shift(out.points);
  for (auto& p : out.points)
    for (auto& c : p) c += out.shift;
  return out;
}

PointGraph point_graph(const AlcovedSpec& spec) {
  PointGraph g;
  g.nodes = lattice_points(spec).points;
  for (std::size_t a = 0; a < g.nodes.size(); ++a)
    for (int label = 1; label <= spec.n(); ++label) {
      Point b = move_along(g.nodes[a], label);
      auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), b);
      if (it != g.nodes.end() && *it == b) g.edges.emplace_back(a, static_cast<std::size_t>(it - g.nodes.begin()), label);
    }
  return g;
}

std::vector<Circuit> alcoved_circuits(const AlcovedSpec& spec) {
  auto points = raw_lattice_points(spec);
  return minimal_circuits(std::set<Point>(points.begin(), points.end()));
}

static std::vector<Simplex> sorted_cells(const AlcovedSpec& spec) {
  LatticePointSet lp = lattice_points(spec);
  if (!is_sort_closed_points(lp.points))
    throw NotSortClosedError("lattice points of the spec are not sort-closed");
  std::vector<Multiset> ground;
  for (const auto& p : lp.points) ground.push_back(Multiset::from_counts(p));
  std::vector<Simplex> cells;
  for (const auto& c : sorted_subsets(ground, static_cast<std::size_t>(spec.n()))) {
    std::vector<Point> vs;
    for (const auto& m : c) {
      Point p = m.counts();
      for (auto& x : p) x -= lp.shift;
      vs.push_back(std::move(p));
    }
    cells.emplace_back(std::move(vs));
  }
  return cells;
}

std::vector<Simplex> triangulate(const AlcovedSpec& spec, TriangulationMethod method) {
  std::vector<Simplex> cells;
  switch (method) {
    case TriangulationMethod::circuit:
      for (const auto& c : alcoved_circuits(spec)) cells.push_back(c.simplex());
      break;
    case TriangulationMethod::sorted:
      cells = sorted_cells(spec);
      break;
    case TriangulationMethod::alcove:
      for (const auto& a : alcoves(spec)) cells.push_back(alcove_simplex(a));
      break;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

LatticeSumResult volume_by_lattice_sum(const AlcovedSpec& spec) {
  const int n = spec.n();
  std::vector<Permutation> perms = all_permutations(n - 1);
  std::stable_sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
    return descent_count(a.inverse()) < descent_count(b.inverse());
  });
  LatticeSumResult result;
  result.terms.resize(perms.size());
  parallel_for(perms.size(), [&](std::size_t idx) {
    const Permutation& w = perms[idx];
    LatticeSumTerm& term = result.terms[idx];
    term.w = w;
    if (spec.empty()) return;
    const int k = descent_count(w.inverse()) + 1;
    const Simplex cell = stanley_simplex(w, k);
    // z-coordinates of the cell's vertices.
    std::vector<std::vector<Int>> zs;
    for (const auto& v : cell.vertices) {
      std::vector<Int> z(static_cast<std::size_t>(n), 0);
      for (int i = 1; i < n; ++i) z[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i - 1)] + v[static_cast<std::size_t>(i - 1)];
      zs.push_back(std::move(z));
    }
    AlcovedSpec::BoundMap shifted;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Int d = std::numeric_limits<Int>::max();
        Int f = std::numeric_limits<Int>::min();
        for (const auto& z : zs) {
          Int value = z[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(i)];
          d = std::min(d, value);
          f = std::max(f, value);
        }
        auto [lo, hi] = spec.effective(i, j);
        shifted[{i, j}] = Bound{lo - d, hi - f};
      }
    term.count = count_points(AlcovedSpec(n, spec.level() - k, std::move(shifted), false));
  });
  for (const auto& t : result.terms) result.total = checked_add(result.total, t.count);
  return result;
}

std::vector<Permutation> restricted_permutations(const AlcovedSpec& spec) {
  if (!spec.unit_cube()) throw MethodDomainError("descent method requires a spec inside the unit cube");
  const int n = spec.n();
  std::vector<Permutation> out;
  if (spec.empty()) return out;
  for_each_permutation(n - 1, [&](const Permutation& w) {
    if (descent_count(w) != spec.level() - 1) return;
    std::vector<int> u{0};
    u.insert(u.end(), w.one_line().begin(), w.one_line().end());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        auto [b, c] = spec.effective(i, j);
        int d = descent_count(std::span<const int>(u).subspan(static_cast<std::size_t>(i), static_cast<std::size_t>(j - i + 1)));
        int first = u[static_cast<std::size_t>(i)];
        int last = u[static_cast<std::size_t>(j)];
        if (d < b || (d == b && first > last)) return;
        if (d > c || (d == c && first < last)) return;
      }
    out.push_back(w);
  });
  return out;
}

Int volume(const AlcovedSpec& spec, VolumeMethod method) {
  switch (method) {
    case VolumeMethod::circuit:
      return static_cast<Int>(alcoved_circuits(spec).size());
    case VolumeMethod::lattice_sum:
      return volume_by_lattice_sum(spec).total;
    case VolumeMethod::descent:
      return static_cast<Int>(restricted_permutations(spec).size());
  }
  return 0;
}

int polytope_dimension(const AlcovedSpec& spec) {
  auto points = raw_lattice_points(spec);
  if (points.empty()) return -1;
  return affine_rank(points);
}

AlcoveCoord alcove_coordinate(const Circuit& c) {
  if (c.vertices.empty()) throw ArgumentError("empty circuit");
  const std::size_t n = c.vertices[0].size();
  AlcoveCoord a;
  a.lambda.assign(n, 0);
  for (const auto& v : c.vertices) {
    Int z = 0;
    for (std::size_t i = 0; i < n; ++i) {
      z += v[i];
      a.lambda[i] += z;
    }
  }
  return a;
}

Simplex alcove_simplex(const AlcoveCoord& coord) {
  const std::size_t n = coord.lambda.size();
  if (n < 2) throw ArgumentError("alcove coordinate too short");
  const Int nn = static_cast<Int>(n);
  if (mod(coord.lambda[n - 1], nn) != 0) throw ArgumentError("last alcove coordinate must be a multiple of n");
  const Int level = coord.lambda[n - 1] / nn;
  // lambda_0 = 0; positions 1..n-1 carry the free coordinates.
  std::vector<Int> lambda(n, 0);
  for (std::size_t i = 1; i < n; ++i) lambda[i] = coord.lambda[i - 1];
  std::vector<Int> base(n);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    base[i] = floor_div(lambda[i], nn);
    if (i > 0) order.push_back(i);
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return mod(lambda[a], nn) > mod(lambda[b], nn); });
  std::vector<Point> vertices;
  std::vector<Int> z = base;
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0) z[order[r - 1]] += 1;
    vertices.push_back(z_to_x(z, level));
  }
  return Simplex(std::move(vertices));
}

namespace {

void walk_alcoves(const AlcovedSpec& spec, std::vector<Int>& lambda, std::vector<bool>& used, int j,
                  std::vector<AlcoveCoord>& out) {
  const int n = spec.n();
  if (j == n) {
    AlcoveCoord a;
    a.lambda.assign(lambda.begin() + 1, lambda.end());
    a.lambda.push_back(checked_mul(spec.level(), n));
    out.push_back(std::move(a));
    return;
  }
  Int lo = std::numeric_limits<Int>::min();
  Int hi = std::numeric_limits<Int>::max();
  for (int i = 0; i < j; ++i) {
    auto [l, h] = spec.effective(i, j);
    lo = std::max(lo, lambda[static_cast<std::size_t>(i)] + n * l);
    hi = std::min(hi, lambda[static_cast<std::size_t>(i)] + n * h);
  }
  for (Int v = lo; v <= hi; ++v) {
    auto r = static_cast<std::size_t>(mod(v, n));
    if (used[r]) continue;
    used[r] = true;
    lambda[static_cast<std::size_t>(j)] = v;
    walk_alcoves(spec, lambda, used, j + 1, out);
    used[r] = false;
  }
}

}  // namespace

std::vector<AlcoveCoord> alcoves(const AlcovedSpec& spec) {
  std::vector<AlcoveCoord> out;
  if (spec.empty()) return out;
  const auto n = static_cast<std::size_t>(spec.n());
  std::vector<Int> lambda(n, 0);
  std::vector<bool> used(n, false);
  used[0] = true;
  walk_alcoves(spec, lambda, used, 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

DualGraph gamma_graph(const AlcovedSpec& spec) {
  const std::vector<AlcoveCoord> nodes = alcoves(spec);
  const int n = spec.n();
  std::vector<std::string> labels;
  for (const auto& a : nodes) labels.push_back(a.to_string());
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    std::vector<Int> lambda(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) lambda[static_cast<std::size_t>(i)] = nodes[a].lambda[static_cast<std::size_t>(i - 1)];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || mod(lambda[static_cast<std::size_t>(i)] + 1 - lambda[static_cast<std::size_t>(j)], n) != 0) continue;
        std::vector<Int> mu = lambda;
        mu[static_cast<std::size_t>(i)] += 1;
        mu[static_cast<std::size_t>(j)] -= 1;
        const Int offset = mu[0];
        AlcoveCoord target;
        for (int t = 1; t < n; ++t) target.lambda.push_back(mu[static_cast<std::size_t>(t)] - offset);
        target.lambda.push_back(nodes[a].lambda.back());
        auto it = std::lower_bound(nodes.begin(), nodes.end(), target);
        if (it != nodes.end() && *it == target) edges.emplace_back(a, static_cast<std::size_t>(it - nodes.begin()));
      }
  }
  return make_dual_graph(std::move(labels), std::move(edges));
}

Poset Poset::transitive_closure() const {
  Poset out = *this;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : std::set<std::pair<int, int>>(out.relations))
      for (int c = 1; c <= m; ++c)
        if (out.relations.contains({b, c}) && out.relations.insert({a, c}).second) changed = true;
  }
  return out;
}

bool Poset::naturally_labeled() const {
  for (auto [a, b] : relations)
    if (a < 1 || b > m || a >= b) return false;
  return true;
}

std::vector<Permutation> linear_extensions(const Poset& p) {
  const Poset closed = p.transitive_closure();
  std::vector<Permutation> out;
  std::vector<int> word;
  std::vector<bool> placed(static_cast<std::size_t>(p.m) + 1, false);
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(word.size()) == p.m) {
      out.emplace_back(word);
      return;
    }
    for (int x = 1; x <= p.m; ++x) {
      if (placed[static_cast<std::size_t>(x)]) continue;
      bool ready = true;
      for (int y = 1; y <= p.m && ready; ++y)
        if (!placed[static_cast<std::size_t>(y)] && closed.less(y, x)) ready = false;
      if (!ready) continue;
      placed[static_cast<std::size_t>(x)] = true;
      word.push_back(x);
      self(self);
      word.pop_back();
      placed[static_cast<std::size_t>(x)] = false;
    }
  };
  extend(extend);
  return out;
}

AlcovedSpec from_order_poset(const Poset& p) {
  if (p.m < 1) throw ArgumentError("poset must have at least one element");
  const Poset closed = p.transitive_closure();
  for (auto [a, b] : closed.relations)
    if (a == b) throw ArgumentError("poset relation is not irreflexive");
  if (!closed.naturally_labeled()) throw ArgumentError("poset is not naturally labeled");
  AlcovedSpec::BoundMap bounds;
  for (int a = 1; a <= p.m; ++a) bounds[{0, a}] = Bound{0, 1};
  for (auto [a, b] : closed.relations) bounds[{a, b}].hi = 0;
  // The all-ones point is feasible, so z_m peaks at exactly 1.
  return AlcovedSpec(p.m + 1, 1, std::move(bounds), false);
}

std::pair<IntPolynomial, IntPolynomial> face_polynomials(const std::vector<Simplex>& cells) {
  auto faces = face_vector(cells);
  const int d = cells.empty() ? 0 : static_cast<int>(cells[0].size());
  return f_and_h(faces, d);
}

bool is_sort_closed_points(const std::vector<Point>& points) {
  if (points.empty()) return true;
  const std::size_t n = points[0].size();
  const Int level = std::accumulate(points[0].begin(), points[0].end(), Int{0});
  for (const auto& p : points) {
    if (p.size() != n) throw ArgumentError("points of different dimensions");
    if (std::accumulate(p.begin(), p.end(), Int{0}) != level) throw ArgumentError("points at different levels");
  }
  const Int shift = normalizing_shift(points);
  std::vector<Multiset> sets;
  for (Point p : points) {
    for (auto& c : p) c += shift;
    sets.push_back(Multiset::from_counts(p));
  }
  std::set<Multiset> present(sets.begin(), sets.end());
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      auto [u, v] = sort_pair(sets[a], sets[b]);
      if (!present.contains(u) || !present.contains(v)) return false;
    }
  return true;
}

}  // namespace alcove
