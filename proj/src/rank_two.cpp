#include "alcove/rank_two.hpp"

#include <algorithm>
#include <sstream>

#include "alcove/errors.hpp"

namespace alcove {

Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

bool edges_cross(Edge e1, Edge e2, int n) {
  e1 = make_edge(e1.first, e1.second);
  e2 = make_edge(e2.first, e2.second);
  for (Edge e : {e1, e2})
    if (e.first < 1 || e.second > n || e.first == e.second) throw ArgumentError("edge endpoints must be distinct in [1..n]");
  Multiset a({e1.first, e1.second}, n);
  Multiset b({e2.first, e2.second}, n);
  return is_sorted_pair(a, b) || is_sorted_pair(b, a);
}

Thrackle::Thrackle(int n_, std::vector<Edge> edges_) : n(n_), edges(std::move(edges_)) {
  for (auto& e : edges) {
    e = make_edge(e.first, e.second);
    if (e.first < 1 || e.second > n || e.first == e.second) throw ArgumentError("edge endpoints must be distinct in [1..n]");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b)
      if (!edges_cross(edges[a], edges[b], n)) throw ArgumentError("edges " + std::to_string(edges[a].first) + "-" +
                                                                   std::to_string(edges[a].second) + " and " +
                                                                   std::to_string(edges[b].first) + "-" +
                                                                   std::to_string(edges[b].second) + " do not cross");
}

std::vector<int> Thrackle::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n) + 1, 0);
  for (auto [a, b] : edges) {
    ++d[static_cast<std::size_t>(a)];
    ++d[static_cast<std::size_t>(b)];
  }
  return d;
}

std::vector<int> Thrackle::cycle_vertices() const {
  auto d = degrees();
  std::vector<int> out;
  for (int v = 1; v <= n; ++v)
    if (d[static_cast<std::size_t>(v)] >= 2) out.push_back(v);
  return out;
}

bool Thrackle::has_edge(Edge e) const {
  return std::binary_search(edges.begin(), edges.end(), make_edge(e.first, e.second));
}

std::string Thrackle::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < edges.size(); ++i) os << (i ? "," : "") << edges[i].first << '-' << edges[i].second;
  os << '}';
  return os.str();
}

OddCycle::OddCycle(std::vector<int> vs) : vertices(std::move(vs)) {
  std::sort(vertices.begin(), vertices.end());
  if (vertices.size() < 3 || vertices.size() % 2 == 0) throw ArgumentError("odd cycle needs an odd number >= 3 of vertices");
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw ArgumentError("odd cycle vertices must be distinct");
}

std::vector<Edge> OddCycle::edges() const {
  const std::size_t m = vertices.size();
  const std::size_t step = static_cast<std::size_t>(half()) + 1;
  std::vector<Edge> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(make_edge(vertices[i], vertices[(i + step) % m]));
  std::sort(out.begin(), out.end());
  return out;
}

static bool is_rank_two_base(const WeightedSetPartition& p, Edge e) {
  return p.part_of(e.first) != p.part_of(e.second);
}

static void require_unweighted(const WeightedSetPartition& p) {
  if (!p.is_unweighted()) throw ArgumentError("rank-two constructions require b = 0 and c = 1 on every part");
}

Thrackle thrackle_from_cycle(const OddCycle& c, const WeightedSetPartition& p) {
  require_unweighted(p);
  const int n = p.n();
  if (c.vertices.back() > n || c.vertices.front() < 1) throw ArgumentError("cycle vertex outside [1..n]");
  const int k = c.half();
  std::vector<int> hits(p.parts.size(), 0);
  for (int v : c.vertices)
    if (++hits[static_cast<std::size_t>(p.part_of(v))] > k)
      throw InvalidCycleError("a part holds more than " + std::to_string(k) + " cycle vertices");
  std::vector<Edge> edges = c.edges();
  const std::size_t m = c.vertices.size();
  for (int u = 1; u <= n; ++u) {
    if (std::binary_search(c.vertices.begin(), c.vertices.end(), u)) continue;
    // u sits between v_i and v_{i+1}; i = m covers the arc from v_m past n to v_1.
    std::size_t i = static_cast<std::size_t>(std::upper_bound(c.vertices.begin(), c.vertices.end(), u) - c.vertices.begin());
    if (i == 0) i = m;
    int opposite = c.vertices[(i + static_cast<std::size_t>(k)) % m];
    Edge e = make_edge(u, opposite);
    for (const Edge& ce : c.edges())
      if (!edges_cross(e, ce, n)) throw ComputationError("opposite chord fails to cross the cycle");
    if (!is_rank_two_base(p, e)) throw InvalidCycleError("opposite chord is not a base");
    edges.push_back(e);
  }
  return Thrackle(n, std::move(edges));
}

std::vector<Thrackle> enumerate_maximal_thrackles(const WeightedSetPartition& p) {
  require_unweighted(p);
  const int n = p.n();
  std::vector<Thrackle> out;
  for (int size = 3; size <= n; size += 2) {
    const int k = size / 2;
    for (const auto& s : all_subsets(n, size)) {
      std::vector<int> hits(p.parts.size(), 0);
      bool ok = true;
      for (int v : s.elements())
        if (++hits[static_cast<std::size_t>(p.part_of(v))] > k) ok = false;
      if (ok) out.push_back(thrackle_from_cycle(OddCycle(s.elements()), p));
    }
  }
  return out;
}

Int volume_by_odd_cycles(const WeightedSetPartition& p) {
  require_unweighted(p);
  const int n = p.n();
  const std::size_t r = p.parts.size();
  Int total = 0;
  for (int k = 1; 2 * k + 1 <= n; ++k) {
    // Coefficient of y^{2k+1} in prod_i sum_{c <= k} binom(a_i, c) y^c.
    std::vector<Int> poly{1};
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Int> next(poly.size() + static_cast<std::size_t>(k), 0);
      for (std::size_t d = 0; d < poly.size(); ++d)
        for (int c = 0; c <= k; ++c)
          next[d + static_cast<std::size_t>(c)] =
              checked_add(next[d + static_cast<std::size_t>(c)], checked_mul(poly[d], binomial(p.parts[i], c)));
      poly = std::move(next);
    }
    const auto target = static_cast<std::size_t>(2 * k + 1);
    if (target < poly.size()) total = checked_add(total, poly[target]);
  }
  return total;
}

Int volume_by_complement(const WeightedSetPartition& p) {
  require_unweighted(p);
  const int n = p.n();
  Int total = Int{1} << (n - 1);
  for (int a : p.parts)
    for (int b = 0; 2 * b + 1 <= a; ++b)
      for (int d = 0; d <= n - a; ++d)
        total = checked_sub(total, checked_mul(binomial(a, 2 * b + d + 1), binomial(n - a, d)));
  return total;
}

std::optional<Thrackle> adjacency_move(const Thrackle& g, Edge edge, const WeightedSetPartition& p) {
  require_unweighted(p);
  if (p.n() != g.n) throw ArgumentError("partition and thrackle live on different ground sets");
  if (!g.has_edge(edge)) throw ArgumentError("edge is not in the thrackle");
  const int n = g.n;
  auto prev = [n](int v) { return v == 1 ? n : v - 1; };
  auto next = [n](int v) { return v == n ? 1 : v + 1; };
  for (auto [a, b] : {Edge{edge.first, edge.second}, Edge{edge.second, edge.first}}) {
    const int a0 = prev(a);
    const int b1 = next(b);
    std::vector<int> four{a0, a, b, b1};
    std::sort(four.begin(), four.end());
    if (std::adjacent_find(four.begin(), four.end()) != four.end()) continue;
    if (!g.has_edge({a0, b}) || !g.has_edge({b1, a})) continue;
    Edge replacement = make_edge(a0, b1);
    if (!is_rank_two_base(p, replacement)) continue;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges)
      if (e != make_edge(a, b)) edges.push_back(e);
    edges.push_back(replacement);
    return Thrackle(n, std::move(edges));
  }
  return std::nullopt;
}

std::optional<Thrackle> adjacency_move(const Thrackle& g, Edge edge) {
  return adjacency_move(g, edge, WeightedSetPartition::unweighted(std::vector<int>(static_cast<std::size_t>(g.n), 1)));
}

int move_degree(const Thrackle& g, const WeightedSetPartition& p) {
  int d = 0;
  for (const Edge& e : g.edges)
    if (adjacency_move(g, e, p)) ++d;
  return d;
}

int simplex_degree(const Thrackle& g) {
  const auto cycle = g.cycle_vertices();
  const int size = static_cast<int>(cycle.size());
  if (size == 3) {
    if (g.n == 3) return 0;
    auto d = g.degrees();
    int two = 0;
    for (int v : cycle)
      if (d[static_cast<std::size_t>(v)] == 2) ++two;
    if (two == 2) return 2;
  }
  return size;
}

std::map<int, Int> degree_histogram(const WeightedSetPartition& p) {
  std::map<int, Int> h;
  for (const auto& g : enumerate_maximal_thrackles(p)) ++h[move_degree(g, p)];
  return h;
}

namespace {

using Series = std::vector<IntPolynomial>;

Series multiply(const Series& a, const Series& b, std::size_t order) {
  Series out(order + 1);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Requires a constant term of 1.
Series invert(const Series& a, std::size_t order) {
  Series out(order + 1);
  out[0] = IntPolynomial::monomial(0, 1);
  for (std::size_t j = 1; j <= order; ++j) {
    IntPolynomial acc;
    for (std::size_t i = 1; i <= j && i < a.size(); ++i) acc += a[i] * out[j - i];
    out[j] = IntPolynomial() - acc;
  }
  return out;
}

IntPolynomial tpoly(std::initializer_list<Int> coefficients) { return IntPolynomial::from_coefficients(coefficients); }

}  // namespace

FPolynomialCheck f_polynomial_check(int n) {
  if (n < 2) throw ArgumentError("f_polynomial_check requires n >= 2");
  FPolynomialCheck out;
  auto profile = sorted_subset_profile(all_subsets(n, 2));
  for (std::size_t i = 1; i < profile.size(); ++i) out.direct.add_term(static_cast<int>(i), profile[i]);

  const auto order = static_cast<std::size_t>(n);
  // Numerator t q^2 (1 + q)(t^2 q^2 + t^2 q - t q + 1).
  Series numerator = {IntPolynomial(), IntPolynomial(), tpoly({0, 1})};
  numerator = multiply(numerator, {tpoly({1}), tpoly({1})}, order);
  numerator = multiply(numerator, {tpoly({1}), tpoly({0, -1, 1}), tpoly({0, 0, 1})}, order);
  // Denominator (1 - t q)^2 (1 - 2 t q - t q^2).
  Series one_minus_tq = {tpoly({1}), tpoly({0, -1})};
  Series denominator = multiply(one_minus_tq, one_minus_tq, order);
  denominator = multiply(denominator, {tpoly({1}), tpoly({0, -2}), tpoly({0, -1})}, order);
  Series f = multiply(numerator, invert(denominator, order), order);

  // q = x / (1 - x) = x + x^2 + ...
  Series q(order + 1, tpoly({1}));
  q[0] = IntPolynomial();
  Series power(order + 1);
  power[0] = tpoly({1});
  Series composed(order + 1);
  for (std::size_t j = 0; j <= order; ++j) {
    for (std::size_t d = 0; d <= order; ++d) composed[d] += f[j] * power[d];
    power = multiply(power, q, order);
  }
  out.series = composed[order];
  return out;
}

}  // namespace alcove
