#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "alcove/core.hpp"
#include "alcove/geometry.hpp"
#include "alcove/polynomial.hpp"

namespace alcove {

struct Bound {
  std::optional<Int> lo;
  std::optional<Int> hi;

  bool operator==(const Bound&) const = default;
};

/// P(b, c) in R^n at level sum(x) = level, cut out by
///   b_ij <= x_{i+1} + ... + x_j <= c_ij   (0 <= i < j <= n-1)
/// i.e. b_ij <= z_j - z_i <= c_ij with z_i = x_1 + ... + x_i. With unit_cube
/// set, 0 <= x_i <= 1 is added for every i (x_n included).
///
/// The constructor closes the system under implied difference constraints
/// and throws UnboundedError unless every z_j is bounded. An inconsistent
/// system (some lo > hi, directly or implied) is accepted and is empty.
class AlcovedSpec {
 public:
  using BoundMap = std::map<std::pair<int, int>, Bound>;

  AlcovedSpec(int n, Int level, BoundMap bounds, bool unit_cube);

  static AlcovedSpec hypersimplex(int k, int n);

  int n() const { return n_; }
  Int level() const { return level_; }
  bool unit_cube() const { return unit_cube_; }
  const BoundMap& bounds() const { return bounds_; }

  bool empty() const { return empty_; }
  // Tightest implied interval for z_j - z_i (i < j), unit cube included.
  // Only meaningful for a non-empty spec.
  std::pair<Int, Int> effective(int i, int j) const;

  // P + m(1, ..., 1).
  AlcovedSpec translated(Int m) const;

  bool operator==(const AlcovedSpec& other) const {
    return n_ == other.n_ && level_ == other.level_ && unit_cube_ == other.unit_cube_ && bounds_ == other.bounds_;
  }

 private:
  int n_;
  Int level_;
  BoundMap bounds_;
  bool unit_cube_;
  bool empty_ = false;
  // dist_[i][j] = max of z_j - z_i, indices 0..n-1.
  std::vector<std::vector<Int>> dist_;
};

struct LatticePointSet {
  // Points translated by shift * (1, ..., 1); all coordinates non-negative.
  std::vector<Point> points;
  Int shift = 0;

  // The points in the spec's own coordinates.
  std::vector<Point> original() const;
};

// Z_P in the spec's own coordinates, lexicographically sorted.
std::vector<Point> raw_lattice_points(const AlcovedSpec& spec);
LatticePointSet lattice_points(const AlcovedSpec& spec);

struct PointGraph {
  std::vector<Point> nodes;
  // (from, to, label) with nodes[to] = nodes[from] + e_{label+1} - e_label.
  std::vector<std::tuple<std::size_t, std::size_t, int>> edges;
};

PointGraph point_graph(const AlcovedSpec& spec);

enum class TriangulationMethod { circuit, sorted, alcove };
enum class VolumeMethod { circuit, lattice_sum, descent };

std::vector<Circuit> alcoved_circuits(const AlcovedSpec& spec);
std::vector<Simplex> triangulate(const AlcovedSpec& spec, TriangulationMethod method);

struct LatticeSumTerm {
  Permutation w;
  Int count = 0;
};

struct LatticeSumResult {
  Int total = 0;
  // One term per w in S_{n-1}, ordered by (des(w^-1), w).
  std::vector<LatticeSumTerm> terms;
};

LatticeSumResult volume_by_lattice_sum(const AlcovedSpec& spec);
std::vector<Permutation> restricted_permutations(const AlcovedSpec& spec);
Int volume(const AlcovedSpec& spec, VolumeMethod method);
int polytope_dimension(const AlcovedSpec& spec);

/// An alcove vertex of the lattice: lambda_i is the sum over the alcove's
/// vertices of z_i, for i = 1..n, so lambda_n = n * level.
struct AlcoveCoord {
  std::vector<Int> lambda;

  std::string to_string() const { return point_to_string(lambda); }
  auto operator<=>(const AlcoveCoord&) const = default;
};

AlcoveCoord alcove_coordinate(const Circuit& c);
// The n vertices of the alcove with the given coordinate.
Simplex alcove_simplex(const AlcoveCoord& coord);
// All alcoves contained in P, lexicographically ordered.
std::vector<AlcoveCoord> alcoves(const AlcovedSpec& spec);
DualGraph gamma_graph(const AlcovedSpec& spec);

/// A strict partial order on [1..m]; relations are pairs (a, b) meaning a < b.
struct Poset {
  int m = 0;
  std::set<std::pair<int, int>> relations;

  Poset transitive_closure() const;
  bool less(int a, int b) const { return relations.contains({a, b}); }
  bool naturally_labeled() const;
};

// Linear extensions as words listing the elements from bottom to top.
std::vector<Permutation> linear_extensions(const Poset& p);

/// Order polytope: 0 <= y_a <= 1 and y_b <= y_a whenever a < b in p, encoded
/// with z_a = y_a in n = m + 1 coordinates at level 1. Requires a natural
/// labeling (a < b in p implies a < b as integers).
AlcovedSpec from_order_poset(const Poset& p);

std::pair<IntPolynomial, IntPolynomial> face_polynomials(const std::vector<Simplex>& cells);

bool is_sort_closed_points(const std::vector<Point>& points);

}  // namespace alcove
