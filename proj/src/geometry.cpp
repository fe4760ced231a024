#include "alcove/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "alcove/errors.hpp"
#include "alcove/parallel.hpp"

namespace alcove {

Simplex::Simplex(std::vector<Point> vs) : vertices(std::move(vs)) { std::sort(vertices.begin(), vertices.end()); }

Point move_along(const Point& a, int label) {
  const int n = static_cast<int>(a.size());
  Point b = a;
  b[static_cast<std::size_t>(label - 1)] -= 1;
  b[static_cast<std::size_t>(label % n)] += 1;
  return b;
}

namespace {

void extend_circuit(const std::set<Point>& points, const Point& start, int n, std::vector<Point>& path,
                    std::vector<int>& labels, unsigned used, std::vector<Circuit>& out) {
  if (static_cast<int>(labels.size()) == n - 1) {
    int last = 1;
    while (used & (1u << last)) ++last;
    labels.push_back(last);
    out.push_back(Circuit{path, labels});
    labels.pop_back();
    return;
  }
  for (int label = 1; label <= n; ++label) {
    if (used & (1u << label)) continue;
    Point next = move_along(path.back(), label);
    if (!(next < start) || !points.contains(next)) continue;
    path.push_back(std::move(next));
    labels.push_back(label);
    extend_circuit(points, start, n, path, labels, used | (1u << label), out);
    labels.pop_back();
    path.pop_back();
  }
}

}  // namespace

std::vector<Circuit> minimal_circuits(const std::set<Point>& points) {
  if (points.empty()) return {};
  const int n = static_cast<int>(points.begin()->size());
  if (n < 1 || n > 30) throw ArgumentError("minimal_circuits supports 1 <= n <= 30");
  std::vector<Point> starts(points.begin(), points.end());
  std::vector<std::vector<Circuit>> found(starts.size());
  parallel_for(starts.size(), [&](std::size_t s) {
    std::vector<Point> path{starts[s]};
    std::vector<int> labels;
    extend_circuit(points, starts[s], n, path, labels, 0, found[s]);
  });
  std::vector<Circuit> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

Int determinant(std::vector<std::vector<Int>> matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw ArgumentError("determinant of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) m[i][j] = matrix[i][j];
  }
  __int128 sign = 1;
  __int128 previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
    previous = m[k][k];
  }
  return static_cast<Int>(sign * m[n - 1][n - 1]);
}

int affine_rank(const std::vector<Point>& points) {
  if (points.size() <= 1) return 0;
  const std::size_t cols = points[0].size();
  std::vector<std::vector<__int128>> rows;
  for (std::size_t p = 1; p < points.size(); ++p) {
    std::vector<__int128> r(cols);
    for (std::size_t c = 0; c < cols; ++c) r[c] = points[p][c] - points[0][c];
    rows.push_back(std::move(r));
  }
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows.size(); ++c) {
    std::size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[row], rows[pivot]);
    for (std::size_t r = row + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      __int128 a = rows[row][c], b = rows[r][c];
      __int128 g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
      for (std::size_t x = c; x < cols; ++x) rows[r][x] = rows[r][x] * (a / g) - rows[row][x] * (b / g);
    }
    ++row;
    ++rank;
  }
  return rank;
}

bool is_unimodular(const Simplex& s) {
  if (s.vertices.empty()) return false;
  const std::size_t n = s.vertices[0].size();
  if (s.vertices.size() != n) return false;
  std::vector<std::vector<Int>> m;
  for (std::size_t p = 1; p < n; ++p) {
    std::vector<Int> r(n - 1);
    for (std::size_t c = 0; c + 1 < n; ++c) r[c] = s.vertices[p][c] - s.vertices[0][c];
    m.push_back(std::move(r));
  }
  Int d = determinant(std::move(m));
  return d == 1 || d == -1;
}

std::vector<int> DualGraph::degrees() const {
  std::vector<int> d(labels.size(), 0);
  for (auto [a, b] : edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

std::map<int, Int> DualGraph::degree_histogram() const {
  std::map<int, Int> h;
  for (int d : degrees()) ++h[d];
  return h;
}

bool DualGraph::has_edge(const std::string& a, const std::string& b) const {
  auto ia = std::find(labels.begin(), labels.end(), a);
  auto ib = std::find(labels.begin(), labels.end(), b);
  if (ia == labels.end() || ib == labels.end()) return false;
  std::size_t x = static_cast<std::size_t>(ia - labels.begin());
  std::size_t y = static_cast<std::size_t>(ib - labels.begin());
  if (x > y) std::swap(x, y);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(x, y));
}

std::set<std::pair<std::string, std::string>> DualGraph::label_edges() const {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [a, b] : edges) out.insert(std::minmax(labels[a], labels[b]));
  return out;
}

DualGraph make_dual_graph(std::vector<std::string> labels, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  for (auto& e : edges) {
    if (e.first == e.second) throw ArgumentError("self loop in dual graph");
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.second >= labels.size()) throw ArgumentError("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return DualGraph{std::move(labels), std::move(edges)};
}

DualGraph shared_facet_graph(const std::vector<Simplex>& cells, const std::vector<std::string>& labels) {
  if (cells.size() != labels.size()) throw ArgumentError("one label per cell required");
  std::map<std::vector<Point>, std::vector<std::size_t>> facets;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& vs = cells[c].vertices;
    for (std::size_t drop = 0; drop < vs.size(); ++drop) {
      std::vector<Point> facet;
      facet.reserve(vs.size() - 1);
      for (std::size_t v = 0; v < vs.size(); ++v)
        if (v != drop) facet.push_back(vs[v]);
      facets[std::move(facet)].push_back(c);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [facet, owners] : facets)
    for (std::size_t a = 0; a < owners.size(); ++a)
      for (std::size_t b = a + 1; b < owners.size(); ++b) edges.emplace_back(owners[a], owners[b]);
  return make_dual_graph(labels, std::move(edges));
}

std::vector<Int> face_vector(const std::vector<Simplex>& cells) {
  if (cells.empty()) return {1};
  const std::size_t d = cells[0].size();
  for (const auto& c : cells)
    if (c.size() != d) throw ArgumentError("cells of different sizes: complex is not pure");
  if (d > 20) throw ArgumentError("cells too large for face enumeration");
  std::map<Point, std::uint32_t> index;
  for (const auto& c : cells)
    for (const auto& v : c.vertices) index.try_emplace(v, static_cast<std::uint32_t>(index.size()));
  std::set<std::vector<std::uint32_t>> faces;
  for (const auto& c : cells) {
    std::vector<std::uint32_t> ids;
    for (const auto& v : c.vertices) ids.push_back(index.at(v));
    std::sort(ids.begin(), ids.end());
    for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
      std::vector<std::uint32_t> face;
      for (std::size_t b = 0; b < d; ++b)
        if (mask & (1u << b)) face.push_back(ids[b]);
      faces.insert(std::move(face));
    }
  }
  std::vector<Int> f(d + 1, 0);
  f[0] = 1;
  for (const auto& face : faces) ++f[face.size()];
  return f;
}

std::pair<IntPolynomial, IntPolynomial> f_and_h(const std::vector<Int>& faces, int cell_size) {
  IntPolynomial f;
  for (std::size_t i = 1; i < faces.size(); ++i) f.add_term(static_cast<int>(i), faces[i]);
  const IntPolynomial t_minus_one = IntPolynomial::from_coefficients({-1, 1});
  IntPolynomial reversed;
  for (int i = 0; i <= cell_size; ++i) {
    Int fi = i < static_cast<int>(faces.size()) ? faces[static_cast<std::size_t>(i)] : 0;
    IntPolynomial power = IntPolynomial::monomial(0, 1);
    for (int e = 0; e < cell_size - i; ++e) power = power * t_minus_one;
    reversed += fi * power;
  }
  IntPolynomial h;
  for (auto [deg, c] : reversed.terms()) h.add_term(cell_size - deg, c);
  return {f, h};
}

std::string point_to_string(const Point& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

}  // namespace alcove
