#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "alcove/core.hpp"
#include "alcove/polynomial.hpp"

namespace alcove {

/// A maximal cell, identified by its sorted vertex list so that cells built by
/// different methods compare bit-exactly.
struct Simplex {
  std::vector<Point> vertices;

  Simplex() = default;
  explicit Simplex(std::vector<Point> vs);

  std::size_t size() const { return vertices.size(); }
  auto operator<=>(const Simplex&) const = default;
};

/// A minimal circuit of a point graph: vertices[t+1] = vertices[t] moved by
/// labels[t], starting at the lexicographically largest vertex.
struct Circuit {
  std::vector<Point> vertices;
  std::vector<int> labels;

  Simplex simplex() const { return Simplex(vertices); }
  LongCycle cycle() const { return LongCycle(Permutation(labels)); }
  auto operator<=>(const Circuit&) const = default;
};

// a + e_{i+1} - e_i with indices cyclic in [1..n].
Point move_along(const Point& a, int label);

/// All minimal circuits of the point graph on `points`: closed walks that use
/// each label 1..n exactly once. Ordered by starting vertex, then labels.
std::vector<Circuit> minimal_circuits(const std::set<Point>& points);

// Exact determinant by fraction-free elimination.
Int determinant(std::vector<std::vector<Int>> matrix);
// Rank of the difference vectors p - points[0].
int affine_rank(const std::vector<Point>& points);
/// n points on a hyperplane sum(x) = const in Z^n span a unimodular simplex
/// iff the difference matrix with the last coordinate dropped has |det| = 1.
bool is_unimodular(const Simplex& s);

/// Graph on triangulation cells. Node order is the order given at construction;
/// edges are stored as (i, j) with i < j in lexicographic order.
struct DualGraph {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t node_count() const { return labels.size(); }
  std::size_t edge_count() const { return edges.size(); }
  std::vector<int> degrees() const;
  std::map<int, Int> degree_histogram() const;
  bool has_edge(const std::string& a, const std::string& b) const;
  // Edge set as label pairs, each pair ordered.
  std::set<std::pair<std::string, std::string>> label_edges() const;
};

DualGraph make_dual_graph(std::vector<std::string> labels, std::vector<std::pair<std::size_t, std::size_t>> edges);

/// Cells sharing all but one vertex are joined.
DualGraph shared_facet_graph(const std::vector<Simplex>& cells, const std::vector<std::string>& labels);

/// Face counts of the complex generated by `cells`: entry i is the number of
/// faces with i vertices, entry 0 is the empty face.
std::vector<Int> face_vector(const std::vector<Simplex>& cells);

/// f(t) = sum_i f_i t^i, f_i the number of faces with i vertices; h from
/// sum_i f_i (t-1)^{d-i} with d the number of vertices per cell.
std::pair<IntPolynomial, IntPolynomial> f_and_h(const std::vector<Int>& faces, int cell_size);

std::string point_to_string(const Point& p);

}  // namespace alcove
